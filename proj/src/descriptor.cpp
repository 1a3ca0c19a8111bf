#include "pgraph/descriptor.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pgraph {

namespace {

class DescriptorParser {
public:
    explicit DescriptorParser(std::string_view text) : text_(text) {}

    std::vector<std::uint64_t> parse() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '1') {
            ++pos_;
            skip_ws();
            if (pos_ != text_.size()) fail("unexpected input after '1'");
            return {};
        }
        std::vector<std::uint64_t> factors;
        parse_atom(factors);
        while (true) {
            skip_ws();
            if (pos_ == text_.size()) break;
            char c = text_[pos_];
            if (c == 'x' || c == 'X') {
                ++pos_;
                parse_atom(factors);
            } else {
                fail("expected 'x' between atoms");
            }
        }
        return factors;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("group descriptor error at position " +
                                    std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::uint64_t parse_uint() {
        skip_ws();
        std::size_t start = pos_;
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > (UINT64_MAX - digit) / 10) fail("integer too large");
            value = value * 10 + digit;
            ++pos_;
        }
        if (pos_ == start) fail("expected an integer");
        return value;
    }

    void parse_atom(std::vector<std::uint64_t>& factors) {
        skip_ws();
        if (pos_ == text_.size() || (text_[pos_] != 'Z' && text_[pos_] != 'z'))
            fail("expected 'Z<k>'");
        ++pos_;
        std::uint64_t order = parse_uint();
        if (order < 2) fail("cyclic factor must be >= 2");
        std::uint64_t reps = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            reps = parse_uint();
            if (reps < 1) fail("repetition exponent must be >= 1");
        }
        if (reps > 64) fail("repetition exponent is unreasonably large");
        for (std::uint64_t i = 0; i < reps; ++i) factors.push_back(order);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group_descriptor(std::string_view text) {
    return GroupSpec::make(DescriptorParser(text).parse());
}

std::string format_group_descriptor(const GroupSpec& g) {
    if (g.is_trivial()) return "1";
    std::ostringstream os;
    const auto& f = g.factors();
    for (std::size_t i = 0; i < f.size();) {
        std::size_t run = i;
        while (run + 1 < f.size() && f[run + 1] == f[i]) ++run;
        if (i > 0) os << " x ";
        os << 'Z' << f[i];
        if (run > i) os << '^' << (run - i + 1);
        i = run + 1;
    }
    return os.str();
}

}  // namespace pgraph
