#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cleanmat/ring.hpp"

namespace cleanmat {

namespace detail {

class Cursor {
public:
    explicit Cursor(std::string_view text, std::size_t offset = 0) : text_(text), offset_(offset) {}

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool done()
    {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    bool accept_word(std::string_view word)
    {
        skip_ws();
        if (text_.substr(pos_, word.size()) != word)
            return false;
        pos_ += word.size();
        return true;
    }

    Integer integer()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::int64_t small_integer()
    {
        std::size_t at = position();
        Integer v = integer();
        if (v > Integer(1) << 31)
            throw ParseError(at, "integer parameter out of range");
        return static_cast<std::int64_t>(v);
    }

    std::size_t position() const { return offset_ + pos_; }

    [[noreturn]] void fail(const std::string &what) const { throw ParseError(position(), what); }

private:
    std::string_view text_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

/// Recursive-descent evaluator for element literals. Products are formed in
/// the written order, so `x*w` over a skew ring is sigma(w) x.
class ElementParser {
public:
    ElementParser(const LocalRing &ring, std::string_view text, std::size_t offset)
        : ring_(ring), cur_(text, offset)
    {
    }

    Element parse()
    {
        Element v = expr();
        if (!cur_.done())
            cur_.fail("unexpected trailing input");
        return v;
    }

private:
    Element expr()
    {
        bool negate = false;
        if (cur_.accept('-'))
            negate = true;
        else
            cur_.accept('+');
        Element acc = term();
        if (negate)
            acc = -acc;
        for (;;) {
            if (cur_.accept('+'))
                acc = acc + term();
            else if (cur_.accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Element term()
    {
        Element acc = power();
        for (;;) {
            if (cur_.accept('*'))
                acc = acc * power();
            else if (cur_.peek() == '/') {
                std::size_t at = cur_.position();
                cur_.accept('/');
                Element d = power();
                try {
                    acc = acc * ring_.invert(d);
                } catch (const Error &) {
                    throw ParseError(at, "division by a non-unit");
                }
            } else
                return acc;
        }
    }

    Element power()
    {
        Element base = primary();
        if (cur_.accept('^')) {
            std::int64_t e = cur_.small_integer();
            return ring_.pow(base, static_cast<unsigned>(e));
        }
        return base;
    }

    Element primary()
    {
        char c = cur_.peek();
        std::size_t at = cur_.position();
        if (c == '(') {
            cur_.accept('(');
            Element v = expr();
            cur_.expect(')');
            return v;
        }
        if (c == '-') {
            cur_.accept('-');
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return ring_.from_integer(cur_.integer());
        if (c == 'w' || c == 'x' || c == 'y') {
            cur_.accept(c);
            try {
                return c == 'w' ? ring_.generator() : ring_.variable();
            } catch (const Error &) {
                throw ParseError(at, std::string("symbol '") + c + "' is not defined over " + ring_.name());
            }
        }
        cur_.fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }

    const LocalRing &ring_;
    Cursor cur_;
};

/// Splits on commas at bracket/parenthesis depth zero, keeping offsets.
inline std::vector<std::pair<std::string_view, std::size_t>> split_top_level(std::string_view text, std::size_t offset)
{
    std::vector<std::pair<std::string_view, std::size_t>> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(' || c == '[')
            ++depth;
        else if (c == ')' || c == ']')
            --depth;
        else if (c == ',' && depth == 0) {
            parts.emplace_back(text.substr(start, i - start), offset + start);
            start = i + 1;
        }
    }
    parts.emplace_back(text.substr(start), offset + start);
    return parts;
}

} // namespace detail

/// Parses `Z`, `Zloc(p)`, `Zmod(p,k)`, `GF(p,m)`, `Trunc(GF(p,m),n)` or
/// `SkewTrunc(GF(p,m),s,n)`.
inline RingSpec parse_ring_spec(std::string_view text)
{
    detail::Cursor cur(text);
    auto galois = [&cur](std::int64_t &p, int &m) {
        if (!cur.accept_word("GF"))
            cur.fail("expected GF(p,m)");
        cur.expect('(');
        p = cur.small_integer();
        cur.expect(',');
        m = static_cast<int>(cur.small_integer());
        cur.expect(')');
    };
    RingSpec spec;
    if (cur.accept_word("Zloc")) {
        cur.expect('(');
        spec = RingSpec::localized(cur.small_integer());
        cur.expect(')');
    } else if (cur.accept_word("Zmod")) {
        cur.expect('(');
        std::int64_t p = cur.small_integer();
        cur.expect(',');
        spec = RingSpec::mod_prime_power(p, static_cast<int>(cur.small_integer()));
        cur.expect(')');
    } else if (cur.accept_word("Z")) {
        spec = RingSpec::integers();
    } else if (cur.accept_word("SkewTrunc")) {
        cur.expect('(');
        std::int64_t p;
        int m;
        galois(p, m);
        cur.expect(',');
        int s = static_cast<int>(cur.small_integer());
        cur.expect(',');
        spec = RingSpec::skew(p, m, s, static_cast<int>(cur.small_integer()));
        cur.expect(')');
    } else if (cur.accept_word("Trunc")) {
        cur.expect('(');
        std::int64_t p;
        int m;
        galois(p, m);
        cur.expect(',');
        spec = RingSpec::truncated(p, m, static_cast<int>(cur.small_integer()));
        cur.expect(')');
    } else if (cur.peek() == 'G') {
        std::int64_t p;
        int m;
        galois(p, m);
        spec = RingSpec::galois(p, m);
    } else {
        cur.fail("unknown ring family");
    }
    if (!cur.done())
        cur.fail("unexpected trailing input");
    return spec;
}

inline LocalRing parse_ring(std::string_view text) { return LocalRing::make(parse_ring_spec(text)); }

/// Element literal: integers, `a/b`, and polynomials in `w`, `x`/`y`.
/// Literals always denote products in the ring's own (unreversed) order.
inline Element parse_element(const LocalRing &ring, std::string_view text, std::size_t offset = 0)
{
    if (ring.is_reversed())
        return ring.adopt(parse_element(ring.opposite(), text, offset));
    return detail::ElementParser(ring, text, offset).parse();
}

/// Comma-separated element list, e.g. the `a1,a0` of a quadratic.
inline std::vector<Element> parse_element_list(const LocalRing &ring, std::string_view text)
{
    std::vector<Element> out;
    for (auto [part, at] : detail::split_top_level(text, 0))
        out.push_back(parse_element(ring, part, at));
    return out;
}

} // namespace cleanmat
