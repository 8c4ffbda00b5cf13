#pragma once
// Base ring contexts.  Generic code is templated on one of these; the
// context carries whatever runtime data the scalar type needs (the modulus
// for Z/p) and is copied freely.

#include <stdexcept>
#include <string>

#include "lnd/num.hpp"
#include "lnd/util.hpp"

namespace lnd {

struct ZRing {
    using Elem = Int;
    static constexpr bool is_field = false;
    static constexpr const char* name = "Z";

    Elem zero() const { return Int(0); }
    Elem one() const { return Int(1); }
    Elem from_long(long v) const { return Int(v); }
    Elem from_int(const Int& v) const { return v; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string to_string(const Elem& a) const { return to_decimal(a); }
    Elem parse(const std::string& s) const { return int_from_string(s); }
    std::string describe() const { return "Z"; }
    bool operator==(const ZRing&) const { return true; }
};

struct QRing {
    using Elem = Rat;
    static constexpr bool is_field = true;
    static constexpr const char* name = "Q";

    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_long(long v) const { return Rat(v); }
    Elem from_int(const Int& v) const { return Rat(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw std::domain_error("division by zero");
        return Rat(1) / a;
    }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string to_string(const Elem& a) const { return to_decimal(a); }
    Elem parse(const std::string& s) const { return rat_from_string(s); }
    std::string describe() const { return "Q"; }
    bool operator==(const QRing&) const { return true; }
};

// Prime field Z/p; elements normalized to [0, p).  p stays below 2^31 so
// products fit in a long.
struct ZpRing {
    long p = 2;
    using Elem = long;
    static constexpr bool is_field = true;
    static constexpr const char* name = "Zmod";

    explicit ZpRing(long prime = 2) : p(prime) {
        if (!is_prime(p)) throw std::invalid_argument("Zmod modulus must be prime");
        if (p >= (1L << 31)) throw std::invalid_argument("Zmod modulus too large");
    }
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_long(long v) const {
        long r = v % p;
        return r < 0 ? r + p : r;
    }
    Elem from_int(const Int& v) const {
        Int r = v % p;
        if (sgn(r) < 0) r += p;
        return r.get_si();
    }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("division by zero mod p");
        // Fermat: a^(p-2) mod p.
        long result = 1, base = a, e = p - 2;
        while (e > 0) {
            if (e & 1) result = (result * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        return result;
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::string to_string(Elem a) const { return std::to_string(a); }
    Elem parse(const std::string& s) const { return from_int(int_from_string(s)); }
    std::string describe() const { return "Zmod:" + std::to_string(p); }
    bool operator==(const ZpRing& o) const { return p == o.p; }
};

// Runtime descriptor used by documents and the CLI.
struct BaseDesc {
    enum class Kind { Z, Q, Zp } kind = Kind::Z;
    long p = 0;

    static BaseDesc z() { return {Kind::Z, 0}; }
    static BaseDesc q() { return {Kind::Q, 0}; }
    static BaseDesc zp(long prime) { return {Kind::Zp, prime}; }

    std::string to_string() const {
        switch (kind) {
            case Kind::Z: return "Z";
            case Kind::Q: return "Q";
            case Kind::Zp: return "Zmod:" + std::to_string(p);
        }
        return "?";
    }
    static BaseDesc parse(const std::string& s) {
        if (s == "Z") return z();
        if (s == "Q") return q();
        if (s.rfind("Zmod:", 0) == 0) return zp(std::stol(s.substr(5)));
        throw ParseError("unknown base ring '" + s + "'");
    }
    bool operator==(const BaseDesc&) const = default;
};

}  // namespace lnd
