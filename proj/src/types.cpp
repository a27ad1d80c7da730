#include "invsq/types.hpp"

namespace invsq {

const char* to_string(Parity p) {
    return p == Parity::even ? "even" : "odd";
}

const char* to_string(Method m) {
    switch (m) {
        case Method::shooting: return "shooting";
        case Method::nystrom: return "nystrom";
        case Method::analytic_weak: return "analytic-weak";
        case Method::analytic_strong: return "analytic-strong";
        case Method::wkb: return "wkb";
    }
    return "?";
}

Parity parse_parity(const std::string& s) {
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    throw std::invalid_argument("unknown parity '" + s + "'");
}

Method parse_method(const std::string& s) {
    if (s == "shooting") return Method::shooting;
    if (s == "nystrom") return Method::nystrom;
    if (s == "analytic-weak") return Method::analytic_weak;
    if (s == "analytic-strong") return Method::analytic_strong;
    if (s == "wkb") return Method::wkb;
    throw std::invalid_argument(
        "unknown method '" + s +
        "'; valid: shooting nystrom analytic-weak analytic-strong wkb");
}

}  // namespace invsq
