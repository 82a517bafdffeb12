#include "hciz/rational.hpp"

namespace hciz {

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

// Accepts "a", "a+b*i", "a-b*i", "b*i" with rational a, b ("*" optional).
GaussianRational gaussian_from_string(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty complex literal");

    auto parse_part = [](std::string u) -> Rational {
        if (!u.empty() && u.back() == '*') u.pop_back();
        if (u.empty() || u == "+") u = "1";
        if (u == "-") u = "-1";
        return rational_from_string(u);
    };

    if (t.back() == 'i') {
        t.pop_back();
        // split at the last top-level +/- that is not a leading sign
        for (size_t k = t.size(); k-- > 1;) {
            if ((t[k] == '+' || t[k] == '-') && t[k - 1] != '/') {
                return {rational_from_string(t.substr(0, k)),
                        parse_part(t[k] == '+' ? t.substr(k + 1) : t.substr(k))};
            }
        }
        return {Rational(0), parse_part(t)};
    }
    return {rational_from_string(t), Rational(0)};
}

std::string to_string(const GaussianRational& z) {
    if (z.im == 0) return z.re.get_str();
    std::string s = z.re.get_str();
    if (z.im > 0) s += "+";
    return s + z.im.get_str() + "*i";
}

}  // namespace hciz
