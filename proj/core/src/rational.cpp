#include "carleson/rational.hpp"

namespace carleson {

namespace {

mpz_class parse_int(const std::string& s) {
    if (s.empty()) throw Error("empty integer literal");
    try {
        return mpz_class(s, 10);
    } catch (const std::invalid_argument&) {
        throw Error("malformed integer literal: '" + s + "'");
    }
}

}  // namespace

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    if (auto slash = s.find('/'); slash != std::string::npos) {
        mpz_class num = parse_int(s.substr(0, slash));
        mpz_class den = parse_int(s.substr(slash + 1));
        if (den == 0) throw Error("zero denominator in '" + s + "'");
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        bool negative = s[0] == '-';
        std::string head = s.substr(0, dot);
        if (head.empty() || head == "-" || head == "+") head += "0";
        std::string frac = s.substr(dot + 1);
        if (frac.empty()) frac = "0";
        mpz_class ip = parse_int(head);
        mpz_class fz = parse_int(frac);
        if (fz < 0) throw Error("malformed decimal literal: '" + s + "'");
        mpz_class den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        mpz_class num = abs(ip) * den + fz;
        if (negative) num = -num;
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    return Rat(parse_int(s));
}

std::string rat_str(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat pow2(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rat(p) : Rat(1, p);
}

}  // namespace carleson
