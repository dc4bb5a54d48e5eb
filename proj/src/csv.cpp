#include "nilcount/csv.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nilcount {

void write_file_atomic(const std::string& path, const std::string& content) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open for writing: " + tmp.string());
        os << content;
        os.flush();
        if (!os) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

u64 parse_u64_scientific(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    size_t i = 0;
    std::string digits;
    i64 frac_len = 0;
    bool in_frac = false;
    bool seen_digit = false;
    for (; i < text.size() && text[i] != 'e' && text[i] != 'E'; ++i) {
        char ch = text[i];
        if (ch == '.') {
            if (in_frac) throw std::invalid_argument("bad number: " + text);
            in_frac = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("bad number: " + text);
        seen_digit = true;
        digits += ch;
        if (in_frac) ++frac_len;
    }
    if (!seen_digit) throw std::invalid_argument("bad number: " + text);
    i64 exp10 = 0;
    if (i < text.size()) { // exponent part
        ++i;
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            neg = text[i] == '-';
            ++i;
        }
        if (i == text.size()) throw std::invalid_argument("bad number: " + text);
        for (; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("bad number: " + text);
            exp10 = exp10 * 10 + (text[i] - '0');
            if (exp10 > 40) throw std::invalid_argument("number out of range: " + text);
        }
        if (neg) exp10 = -exp10;
    }
    exp10 -= frac_len;
    if (exp10 < 0) {
        // Integral only if the trailing fraction digits are zero.
        while (exp10 < 0 && !digits.empty() && digits.back() == '0') {
            digits.pop_back();
            ++exp10;
        }
        if (exp10 < 0) throw std::invalid_argument("not an integer: " + text);
    }
    u128 value = 0;
    constexpr u128 kMax = ~u64(0);
    for (char ch : digits) {
        value = value * 10 + static_cast<unsigned>(ch - '0');
        if (value > kMax) throw std::invalid_argument("number out of range: " + text);
    }
    for (i64 k = 0; k < exp10; ++k) {
        value *= 10;
        if (value > kMax) throw std::invalid_argument("number out of range: " + text);
    }
    return static_cast<u64>(value);
}

} // namespace nilcount
