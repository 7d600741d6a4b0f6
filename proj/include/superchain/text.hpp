#pragma once

#include <cctype>
#include <string>

#include "calculus.hpp"
#include "wedge.hpp"

namespace superchain {

struct parse_error : std::runtime_error {
    parse_error(const std::string& what, size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    size_t position;
};

namespace detail {

inline std::string monomial_text(const Monomial& m) {
    const int n = m.dimension();
    std::string out;
    for (int k = 1; k <= n; ++k) {
        const int e = m.exponent(k);
        if (e == 0) continue;
        if (!out.empty()) out += ' ';
        out += 'x';
        if (n > 1) out += std::to_string(k);
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

/// Unit-coefficient text of a generator; empty for the constant function.
inline std::string generator_body(const Generator& g) {
    const int n = g.dimension();
    std::string out = monomial_text(g.mono);
    std::string gen;
    if (g.is_vector_field()) {
        gen = "d/dx";
        if (n > 1) gen += std::to_string(g.direction);
    } else {
        for (size_t t = 0; t < g.form_indices.size(); ++t) {
            if (t > 0) gen += '*';
            gen += "dx";
            if (n > 1) gen += std::to_string(g.form_indices[t]);
        }
    }
    if (!gen.empty()) {
        if (!out.empty()) out += ' ';
        out += gen;
    }
    return out;
}

inline std::string term_text(const Rational& magnitude, const std::string& body) {
    if (body.empty()) return magnitude.str();
    if (magnitude == Rational(1)) return body;
    return magnitude.str() + " " + body;
}

template <typename Terms, typename BodyFn>
std::string combination_text(const Terms& terms, BodyFn body_of) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : terms) {
        const bool neg = coeff < Rational(0);
        const Rational mag = neg ? -coeff : coeff;
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += term_text(mag, body_of(key));
    }
    return out;
}

class TextParser {
public:
    TextParser(const std::string& s, int n) : s_(s), n_(n) {}

    Element parse_element() {
        Element out;
        skip_ws();
        if (eof()) throw parse_error("empty input", pos_);
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        for (;;) {
            parse_term(out, sign);
            skip_ws();
            if (eof()) break;
            if (peek() == '+') {
                sign = 1;
            } else if (peek() == '-') {
                sign = -1;
            } else {
                throw parse_error("expected '+' or '-'", pos_);
            }
            ++pos_;
        }
        return out;
    }

    /// A single generator with unit coefficient (one wedge factor).
    Generator parse_factor() {
        Element e = parse_element();
        if (e.terms.size() != 1 || e.terms.begin()->second != Rational(1))
            throw parse_error("expected a single unit-coefficient generator", 0);
        return e.terms.begin()->first;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_digit() const {
        return !eof() && std::isdigit(static_cast<unsigned char>(peek()));
    }

    long parse_nat(const char* what, long limit) {
        if (!at_digit()) throw parse_error(std::string("expected ") + what, pos_);
        long v = 0;
        while (at_digit()) {
            v = v * 10 + (peek() - '0');
            if (v > limit) throw parse_error(std::string(what) + " too large", pos_);
            ++pos_;
        }
        return v;
    }

    // Coordinate index suffix; defaults to 1 when absent.
    int parse_index() {
        int idx = 1;
        if (at_digit()) idx = static_cast<int>(parse_nat("coordinate index", 1000000));
        if (idx < 1 || idx > n_)
            throw parse_error("unknown coordinate index x" + std::to_string(idx), pos_);
        return idx;
    }

    void parse_term(Element& out, int sign) {
        skip_ws();
        Rational coeff(sign);
        bool had_rational = false;
        if (at_digit()) {
            BigInt num(parse_nat("integer", 1000000000L));
            BigInt den(1);
            if (!eof() && peek() == '/' && pos_ + 1 < s_.size() &&
                std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                den = parse_nat("denominator", 1000000000L);
            }
            coeff = coeff * Rational(num, den);
            had_rational = true;
        }
        skip_ws();
        Monomial mono(n_);
        bool had_mono = false;
        while (!eof() && peek() == 'x') {
            ++pos_;
            const int idx = parse_index();
            long exp = 1;
            if (!eof() && peek() == '^') {
                ++pos_;
                exp = parse_nat("exponent", 1000000);
            }
            mono.exponents[static_cast<size_t>(idx - 1)] += static_cast<int>(exp);
            had_mono = true;
            skip_ws();
        }
        if (!eof() && peek() == 'd') {
            if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '/') {
                expect("d/dx");
                out.add(make_vector_field(parse_index(), mono), coeff);
                return;
            }
            IntSeq indices;
            expect("dx");
            indices.push_back(parse_index());
            skip_ws();
            while (!eof() && peek() == '*') {
                ++pos_;
                skip_ws();
                expect("dx");
                const int idx = parse_index();
                if (idx <= indices.back())
                    throw parse_error("form indices must be strictly increasing", pos_);
                indices.push_back(idx);
                skip_ws();
            }
            out.add(make_form(std::move(indices), mono), coeff);
            return;
        }
        if (had_mono || had_rational) {
            out.add(make_form({}, mono), coeff);  // 0-form
            return;
        }
        throw parse_error("expected term", pos_);
    }

    void expect(const std::string& tok) {
        if (s_.compare(pos_, tok.size(), tok) != 0)
            throw parse_error("expected '" + tok + "'", pos_);
        pos_ += tok.size();
    }

    const std::string& s_;
    size_t pos_ = 0;
    int n_;
};

}  // namespace detail

inline Element parse_element(const std::string& text, int n = 1) {
    return detail::TextParser(text, n).parse_element();
}

inline std::string format_element(const Element& e) {
    return detail::combination_text(e.terms, [](const Generator& g) {
        return detail::generator_body(g);
    });
}

inline std::string format_word(const WedgeWord& w) {
    std::string out;
    for (int i = 0; i < w.size(); ++i) {
        if (i > 0) out += " & ";
        const std::string body = detail::generator_body(w.factors[static_cast<size_t>(i)]);
        out += body.empty() ? "1" : body;
    }
    return out;
}

inline std::string format_chain(const Chain& c) {
    return detail::combination_text(c.terms,
                                    [](const WedgeWord& w) { return format_word(w); });
}

/// Wedge factors separated by '&', e.g. "d/dx & x d/dx & 1 & x".
inline std::vector<Generator> parse_word_factors(const std::string& text, int n = 1) {
    std::vector<Generator> factors;
    size_t start = 0;
    while (start <= text.size()) {
        size_t amp = text.find('&', start);
        const std::string piece =
            text.substr(start, amp == std::string::npos ? amp : amp - start);
        factors.push_back(detail::TextParser(piece, n).parse_factor());
        if (amp == std::string::npos) break;
        start = amp + 1;
    }
    return factors;
}

}  // namespace superchain
