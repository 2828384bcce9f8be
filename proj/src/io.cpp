#include "fours/io.hpp"

#include <cctype>
#include <cstring>
#include <ostream>
#include <sstream>

namespace fours {

namespace {

void append_monomial(std::string &out, const Exp3 &e) {
    const std::pair<char, long> parts[3] = {{'a', e.i}, {'b', e.j}, {'c', e.k}};
    for (const auto &[ch, exp] : parts) {
        if (exp == 0)
            continue;
        if (!out.empty())
            out.push_back('*');
        out.push_back(ch);
        if (exp != 1) {
            out.push_back('^');
            out += std::to_string(exp);
        }
    }
}

/// One printed term; `negative` is split off so the caller can emit " - ".
struct TermText {
    bool negative = false;
    std::string text;
};

TermText term_text(const Scalar &s, const Exp3 &e, Tv basis) {
    TermText t;
    Scalar mag = s;
    if (s.field().is_rational() && s.rational() < 0) {
        t.negative = true;
        mag = -s;
    }
    std::string mono;
    append_monomial(mono, e);
    std::string body;
    if (!mag.is_one() || (mono.empty() && basis == Tv::E))
        body = mag.str();
    if (!mono.empty()) {
        if (!body.empty())
            body.push_back('*');
        body += mono;
    }
    if (basis != Tv::E) {
        if (!body.empty())
            body.push_back('*');
        body.push_back(tv_char(basis));
    }
    t.text = body;
    return t;
}

std::string join_terms(const std::vector<TermText> &terms) {
    if (terms.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0)
            out += terms[i].negative ? "-" : "";
        else
            out += terms[i].negative ? " - " : " + ";
        out += terms[i].text;
    }
    return out;
}

} // namespace

std::string to_string(const Scalar &s) { return s.str(); }

std::string to_string(const LaurentPoly &p) {
    std::vector<TermText> terms;
    for (const auto &[e, s] : p.terms())
        terms.push_back(term_text(s, e, Tv::E));
    return join_terms(terms);
}

std::string to_string(const AlgebraElement &a) {
    std::vector<TermText> terms;
    for (Tv t : {Tv::E, Tv::X, Tv::Y, Tv::Z})
        for (const auto &[e, s] : a.component(t).terms())
            terms.push_back(term_text(s, e, t));
    return join_terms(terms);
}

std::string to_string(const GroupElement &g) {
    std::string mono;
    append_monomial(mono, g.h);
    if (g.t != Tv::E) {
        if (!mono.empty())
            mono.push_back('*');
        mono.push_back(tv_char(g.t));
    }
    return mono.empty() ? "1" : mono;
}

std::string to_string(const DihedralWord &w) { return w.str(); }

std::string to_string(const Matrix4 &m) {
    std::ostringstream os;
    for (int r = 0; r < 4; ++r) {
        os << '[';
        for (int c = 0; c < 4; ++c) {
            if (c)
                os << ", ";
            os << to_string(m.at(r, c));
        }
        os << "]\n";
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const LaurentPoly &p) { return os << to_string(p); }
std::ostream &operator<<(std::ostream &os, const AlgebraElement &a) { return os << to_string(a); }
std::ostream &operator<<(std::ostream &os, const GroupElement &g) { return os << to_string(g); }
std::ostream &operator<<(std::ostream &os, const DihedralWord &w) { return os << to_string(w); }

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
    Parser(const std::string &text, const Field &field) : text_(text), field_(field) {}

    AlgebraElement parse() {
        AlgebraElement e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("trailing input");
        return e;
    }

private:
    const std::string &text_;
    Field field_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static bool is_letter(char c) { return c && std::strchr("abcxyz", c) != nullptr; }
    static bool starts_atom(char c) {
        return is_letter(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '(';
    }

    AlgebraElement parse_expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        AlgebraElement acc = parse_product();
        if (neg)
            acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                AlgebraElement rhs = parse_product();
                acc = c == '+' ? acc + rhs : acc - rhs;
            } else {
                return acc;
            }
        }
    }

    AlgebraElement parse_product() {
        AlgebraElement acc = parse_power();
        while (true) {
            if (eat('*')) {
                acc *= parse_power();
            } else if (starts_atom(peek())) {
                acc *= parse_power(); // juxtaposition, e.g. "xyx" or "2x"
            } else {
                return acc;
            }
        }
    }

    AlgebraElement parse_power() {
        AlgebraElement base = parse_atom();
        if (!eat('^'))
            return base;
        long exp = parse_int();
        if (exp >= 0) {
            AlgebraElement r = AlgebraElement::one(field_);
            AlgebraElement b = base;
            unsigned long n = static_cast<unsigned long>(exp);
            while (n) {
                if (n & 1)
                    r *= b;
                b *= b;
                n >>= 1;
            }
            return r;
        }
        // Negative exponents only on single group-element terms.
        auto supp = base.support();
        if (supp.size() != 1)
            fail("negative exponent requires a monomial");
        Scalar lam = base.coeff(supp[0]);
        Scalar lam_pow = Scalar::one(field_);
        Scalar lam_inv = lam.inv();
        for (long n = 0; n < -exp; ++n)
            lam_pow *= lam_inv;
        return AlgebraElement::of_group(field_, gpow(supp[0], exp), lam_pow);
    }

    long parse_int() {
        skip_ws();
        bool neg = eat('-');
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected integer");
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > (1L << 40))
                fail("exponent too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    AlgebraElement parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            AlgebraElement e = parse_expr();
            if (!eat(')'))
                fail("expected ')'");
            return e;
        }
        if (is_letter(c)) {
            ++pos_;
            switch (c) {
            case 'a': return AlgebraElement::of_poly(LaurentPoly::variable(field_, Var::A));
            case 'b': return AlgebraElement::of_poly(LaurentPoly::variable(field_, Var::B));
            case 'c': return AlgebraElement::of_poly(LaurentPoly::variable(field_, Var::C));
            case 'x': return AlgebraElement::basis(field_, Tv::X);
            case 'y': return AlgebraElement::basis(field_, Tv::Y);
            default: return AlgebraElement::basis(field_, Tv::Z);
            }
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = parse_mpz();
            if (eat('/')) {
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    fail("expected denominator");
                mpz_class den = parse_mpz();
                if (den == 0)
                    fail("zero denominator");
                return AlgebraElement::scalar(field_, Scalar::of_mpq(field_, mpq_class(num, den)));
            }
            return AlgebraElement::scalar(field_, Scalar::of_mpq(field_, mpq_class(num)));
        }
        fail("expected a term");
    }

    mpz_class parse_mpz() {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits.push_back(text_[pos_]);
            ++pos_;
        }
        return mpz_class(digits);
    }
};

} // namespace

AlgebraElement parse_element(const std::string &text, const Field &field) {
    return Parser(text, field).parse();
}

GroupElement parse_group_element(const std::string &text) {
    AlgebraElement e = parse_element(text, Field::rationals());
    auto supp = e.support();
    if (supp.size() != 1 || !e.coeff(supp[0]).is_one())
        throw ParseError("expected a single group element with coefficient 1", 0);
    return supp[0];
}

} // namespace fours
