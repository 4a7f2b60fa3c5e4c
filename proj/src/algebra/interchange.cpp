#include "weddle/algebra/interchange.hpp"

#include <cstdio>
#include <sstream>

namespace weddle::algebra {

namespace {

std::string rational_text(const Rational& c) {
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string double_text(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

template <class F, class Fmt>
std::string write(const SparsePoly<F>& p, const std::string& field, Fmt fmt) {
    std::ostringstream os;
    os << "vars=" << p.nvars() << " degree=" << std::max(p.degree(), 0) << " field=" << field << '\n';
    // Descending order, matching monomials().
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        for (std::size_t i = 0; i < it->first.size(); ++i) os << (i ? " " : "") << it->first[i];
        os << " : " << fmt(it->second) << '\n';
    }
    return os.str();
}

struct Header {
    std::size_t vars = 0;
    int degree = 0;
    std::string field;
};

Header parse_header(const std::string& line) {
    Header h;
    std::istringstream is(line);
    std::string tok;
    bool have_vars = false, have_field = false;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("malformed header token: " + tok);
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        try {
            if (key == "vars") {
                h.vars = std::stoul(val);
                have_vars = true;
            } else if (key == "degree") {
                h.degree = std::stoi(val);
            } else if (key == "field") {
                h.field = val;
                have_field = true;
            } else {
                throw ParseError("unknown header key: " + key);
            }
        } catch (const std::logic_error&) {
            throw ParseError("malformed header value: " + tok);
        }
    }
    if (!have_vars || !have_field) throw ParseError("header must carry vars= and field=");
    return h;
}

template <class F, class Coef>
SparsePoly<F> read(const std::string& text, const std::string& expect_prefix, Coef coef, Header* hdr = nullptr) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty polynomial text");
    Header h = parse_header(line);
    if (h.field.rfind(expect_prefix, 0) != 0) throw ParseError("field tag " + h.field + " does not match");
    if (hdr) *hdr = h;
    SparsePoly<F> p(h.vars);
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("term line without ':' : " + line);
        std::istringstream es(line.substr(0, colon));
        Exponents e;
        long v;
        while (es >> v) {
            if (v < 0 || v > 65535) throw ParseError("exponent out of range");
            e.push_back(static_cast<std::uint16_t>(v));
        }
        if (!es.eof()) throw ParseError("malformed exponent list: " + line);
        if (e.size() != h.vars) throw ParseError("exponent count differs from vars=");
        std::string c = line.substr(colon + 1);
        auto b = c.find_first_not_of(" \t");
        auto t = c.find_last_not_of(" \t\r");
        if (b == std::string::npos) throw ParseError("missing coefficient");
        p.add_term(e, coef(c.substr(b, t - b + 1), h));
    }
    if (!p.is_zero() && p.degree() != h.degree) throw ParseError("degree= does not match the terms");
    return p;
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw ParseError("malformed rational: " + s);
    if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::pair<std::string, std::string> split_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("expected a pair 'x,y': " + s);
    return {s.substr(0, comma), s.substr(comma + 1)};
}

double parse_double(const std::string& s) {
    try {
        std::size_t used = 0;
        double d = std::stod(s, &used);
        if (used != s.size()) throw ParseError("malformed real: " + s);
        return d;
    } catch (const std::logic_error&) {
        throw ParseError("malformed real: " + s);
    }
}

}  // namespace

std::string to_interchange(const SparsePoly<Rational>& p) { return write(p, "Q", rational_text); }

std::string to_interchange(const SparsePoly<Fp>& p, std::int64_t modulus) {
    return write(p, "Fp:" + std::to_string(modulus),
                 [modulus](const Fp& c) { return std::to_string(c.bind(modulus).value()) + "/1"; });
}

std::string to_interchange(const SparsePoly<QOmega>& p) {
    return write(p, "Qw", [](const QOmega& c) { return rational_text(c.u()) + "," + rational_text(c.v()); });
}

std::string to_interchange(const SparsePoly<Complex>& p) {
    return write(p, "C", [](const Complex& c) { return double_text(c.real()) + "," + double_text(c.imag()); });
}

std::string interchange_field(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty polynomial text");
    return parse_header(line).field;
}

SparsePoly<Rational> parse_rational_poly(const std::string& text) {
    Header h;
    auto p = read<Rational>(text, "Q", [](const std::string& c, const Header&) { return parse_rational(c); }, &h);
    if (h.field != "Q") throw ParseError("field tag " + h.field + " does not match");
    return p;
}

SparsePoly<Fp> parse_fp_poly(const std::string& text) {
    return read<Fp>(text, "Fp:", [](const std::string& c, const Header& h) {
        std::int64_t p = 0;
        try {
            p = std::stoll(h.field.substr(3));
        } catch (const std::logic_error&) {
            throw ParseError("malformed modulus in field tag " + h.field);
        }
        if (!is_prime(static_cast<std::uint64_t>(p))) throw ParseError("field modulus is not prime");
        return rational_mod(parse_rational(c), p);
    });
}

SparsePoly<QOmega> parse_qomega_poly(const std::string& text) {
    return read<QOmega>(text, "Qw", [](const std::string& c, const Header&) {
        auto [u, v] = split_pair(c);
        return QOmega(parse_rational(u), parse_rational(v));
    });
}

SparsePoly<Complex> parse_complex_poly(const std::string& text) {
    return read<Complex>(text, "C", [](const std::string& c, const Header&) {
        auto [re, im] = split_pair(c);
        return Complex(parse_double(re), parse_double(im));
    });
}

}  // namespace weddle::algebra

namespace weddle::algebra {

std::string to_readable(const SparsePoly<Rational>& p, const std::string& prefix, int first) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += prefix + std::to_string(first + static_cast<int>(i));
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string term;
        if (mono.empty()) term = mag.get_str();
        else if (mag == 1) term = mono;
        else term = mag.get_str() + "*" + mono;
        if (out.empty()) out = sgn(c) < 0 ? "-" + term : term;
        else out += (sgn(c) < 0 ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace weddle::algebra
