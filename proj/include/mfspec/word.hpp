#ifndef MFSPEC_WORD_HPP
#define MFSPEC_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mfspec/errors.hpp"

namespace mfspec {

/// Hard cap on word length; longer demands are a usage error.
inline constexpr std::size_t kMaxWordLength = std::size_t{1} << 20;

/// A finite 0/1 word, i.e. a cylinder in {0,1}^N. Positions are
/// 1-based in the math; operator[] is 0-based storage access.
class BinaryWord {
public:
    BinaryWord() = default;

    explicit BinaryWord(std::string_view text) {
        check_length(text.size());
        bits_.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1')
                throw InvalidSymbol("word symbols must be '0' or '1'");
            bits_.push_back(static_cast<std::uint8_t>(c - '0'));
        }
    }

    explicit BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        check_length(bits_.size());
        for (std::uint8_t b : bits_)
            if (b > 1) throw InvalidSymbol("word symbols must be 0 or 1");
    }

    /// Word of given length whose position k carries bit (k-1) of `code`.
    static BinaryWord from_code(std::uint64_t code, std::size_t length) {
        BinaryWord w;
        w.assign_code(code, length);
        return w;
    }

    void assign_code(std::uint64_t code, std::size_t length) {
        check_length(length);
        bits_.resize(length);
        for (std::size_t i = 0; i < length; ++i)
            bits_[i] = static_cast<std::uint8_t>((code >> i) & 1u);
    }

    std::size_t length() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    int operator[](std::size_t i) const noexcept { return bits_[i]; }

    /// Symbol at 1-based position k.
    int symbol(std::size_t k) const noexcept { return bits_[k - 1]; }

    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
    std::vector<std::uint8_t>& bits() noexcept { return bits_; }

    std::string to_string() const {
        std::string s;
        s.reserve(bits_.size());
        for (std::uint8_t b : bits_) s.push_back(static_cast<char>('0' + b));
        return s;
    }

private:
    static void check_length(std::size_t n) {
        if (n > kMaxWordLength) throw WordTooLong("word longer than 2^20 symbols");
    }

    std::vector<std::uint8_t> bits_;
};

}  // namespace mfspec

#endif
