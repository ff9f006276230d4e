#include "zerorect/rat.hpp"

#include <cmath>

namespace zr {

const char* err_name(Err e) {
    switch (e) {
        case Err::UniverseMismatch: return "UniverseMismatch";
        case Err::InvalidLambda: return "InvalidLambda";
        case Err::InvalidPrime: return "InvalidPrime";
        case Err::InvalidFrequency: return "InvalidFrequency";
        case Err::InvalidProbability: return "InvalidProbability";
        case Err::InvalidParams: return "InvalidParams";
        case Err::EmptyFamily: return "EmptyFamily";
        case Err::NoDisjointPairs: return "NoDisjointPairs";
        case Err::DensityTooLow: return "DensityTooLow";
        case Err::BudgetExceeded: return "BudgetExceeded";
        case Err::ZeroVariance: return "ZeroVariance";
        case Err::PreconditionFailed: return "PreconditionFailed";
        case Err::TooDense: return "TooDense";
        case Err::RankContradiction: return "RankContradiction";
        case Err::NumericalFailure: return "NumericalFailure";
        case Err::ConstantsFalsified: return "ConstantsFalsified";
        case Err::ProgressViolation: return "ProgressViolation";
        case Err::EmptyResult: return "EmptyResult";
        case Err::VerificationFailed: return "VerificationFailed";
        case Err::BadInput: return "BadInput";
    }
    return "UnknownError";
}

std::string to_string(PairCount v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

double to_double(PairCount v) { return static_cast<double>(v); }

Rat rat_from_double(double x) {
    if (!std::isfinite(x)) throw Error(Err::BadInput, "non-finite double");
    if (x == 0.0) return Rat(0);
    int exp = 0;
    double mant = std::frexp(x, &exp); // x = mant * 2^exp, |mant| in [0.5,1)
    // 53 doublings turn the mantissa into an integer.
    BigInt num = BigInt(static_cast<long long>(std::ldexp(mant, 53)));
    exp -= 53;
    Rat r(num);
    if (exp > 0)
        r *= rat_pow(Rat(2), unsigned(exp));
    else if (exp < 0)
        r /= rat_pow(Rat(2), unsigned(-exp));
    return r;
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw Error(Err::BadInput, "empty number");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) throw Error(Err::BadInput, "zero denominator: " + s);
            return Rat(num, den);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rat(BigInt(s));
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (ip.empty() || ip == "-" || ip == "+") ip += "0";
        BigInt scale = 1;
        for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
        BigInt whole(ip), frac = fp.empty() ? BigInt(0) : BigInt(fp);
        BigInt num = whole * scale + (neg ? -frac : frac);
        return Rat(num, scale);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(Err::BadInput, "cannot parse number: " + s);
    }
}

std::string format_rat(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_pow(const Rat& base, unsigned exp) {
    Rat acc(1), b = base;
    while (exp) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace zr
