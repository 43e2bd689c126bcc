#include "rado/numeric.hpp"

#include <stdexcept>

#include "rado/errors.hpp"

namespace rado {

Int int_divexact(const Int& a, const Int& b) {
    if (b == 0) throw std::logic_error("int_divexact: division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::logic_error("int_divexact: " + to_decimal(a) + " not divisible by " + to_decimal(b));
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::string to_decimal(const Int& v) { return v.get_str(); }

std::string to_decimal(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw validation_error("not an integer: '" + s + "'");
    }
}

Rat parse_rat(const std::string& s) {
    auto dot = s.find('.');
    try {
        if (dot == std::string::npos) {
            Rat r(s);
            r.canonicalize();
            return r;
        }
        // decimal literal: digits '.' digits
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        if (tail.empty()) tail = "0";
        if (head.empty() || head == "-" || head == "+") head += "0";
        Int scale = int_pow(Int(10), static_cast<unsigned long>(tail.size()));
        Int whole = parse_int(head);
        Int frac = parse_int(tail);
        bool neg = !head.empty() && head[0] == '-';
        Int num = whole * scale + (neg ? -frac : frac);
        Rat r(num, scale);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw validation_error("not a rational: '" + s + "'");
    }
}

} // namespace rado
