#include "relkit/numeric.hpp"

#include <sstream>

namespace relkit {

std::string rat_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
    std::string t = s;
    bool neg = false;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    if (t.empty()) throw ContractError("empty rational literal: '" + s + "'");
    Rational v;
    auto slash = t.find('/');
    auto dot = t.find('.');
    if (slash != std::string::npos) {
        std::string num = t.substr(0, slash), den = t.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw ContractError("bad rational literal: '" + s + "'");
        BigInt d(den);
        if (d == 0) throw ContractError("zero denominator: '" + s + "'");
        v = Rational(BigInt(num), d);
    } else if (dot != std::string::npos) {
        std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (fp.empty()) fp = "0";
        if (!all_digits(ip) || !all_digits(fp)) throw ContractError("bad decimal literal: '" + s + "'");
        BigInt scale = 1;
        for (size_t k = 0; k < fp.size(); ++k) scale *= 10;
        v = Rational(BigInt(ip) * scale + BigInt(fp), scale);
    } else {
        if (!all_digits(t)) throw ContractError("bad integer literal: '" + s + "'");
        v = Rational(BigInt(t));
    }
    return neg ? -v : v;
}

std::string gr_to_string(const GaussianRational& g) {
    if (g.im == 0) return rat_to_string(g.re);
    std::string im;
    if (g.im == 1)
        im = "i";
    else if (g.im == -1)
        im = "-i";
    else
        im = rat_to_string(g.im) + "*i";
    if (g.re == 0) return im;
    std::string s = rat_to_string(g.re);
    if (g.im > 0) s += "+";
    return s + im;
}

std::string half_to_string(const HalfInt& h) {
    std::ostringstream os;
    if (h.twice % 2 == 0)
        os << h.twice / 2;
    else
        os << h.twice << "/2";
    return os.str();
}

HalfInt parse_half(const std::string& s) {
    Rational r = parse_rational(s);
    Rational t = r * 2;
    if (boost::multiprecision::denominator(t) != 1)
        throw ContractError("not a half-integer: '" + s + "'");
    return HalfInt::from_twice(boost::multiprecision::numerator(t));
}

std::string weight_to_string(const Weight& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += half_to_string(w[i]);
    }
    return s;
}

Weight parse_weight(const std::string& s) {
    Weight w;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) w.push_back(parse_half(cur));
    if (w.empty()) throw ContractError("empty weight: '" + s + "'");
    return w;
}

}  // namespace relkit
