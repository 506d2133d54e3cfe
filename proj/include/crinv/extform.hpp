#pragma once

#include "altform.hpp"

namespace crinv {

/// Finite sum of alternating forms of mixed bidegrees on a fixed dimension.
class MixedForm {
public:
    int n = 0;
    std::map<std::pair<int, int>, AltForm> parts;

    MixedForm() = default;
    explicit MixedForm(int n_) : n(n_) {}

    static MixedForm of(const AltForm& f) {
        MixedForm m(f.n);
        m.add(f);
        return m;
    }

    bool is_zero() const { return parts.empty(); }

    AltForm part(int p, int q) const {
        auto it = parts.find({p, q});
        return it == parts.end() ? AltForm(n, p, q) : it->second;
    }

    void add(const AltForm& f) {
        if (n == 0 && parts.empty()) n = f.n;
        if (f.n != n) throw std::invalid_argument("mixed form dimension mismatch");
        if (f.is_zero()) return;
        auto key = std::make_pair(f.p, f.q);
        auto it = parts.find(key);
        if (it == parts.end()) {
            parts.emplace(key, f);
        } else {
            it->second += f;
            if (it->second.is_zero()) parts.erase(it);
        }
    }

    MixedForm& operator+=(const MixedForm& o) {
        for (const auto& [k, f] : o.parts) add(f);
        return *this;
    }

    MixedForm& operator-=(const MixedForm& o) {
        for (const auto& [k, f] : o.parts) add(-f);
        return *this;
    }

    MixedForm& operator*=(const CRat& c) {
        if (c.is_zero()) { parts.clear(); return *this; }
        for (auto& [k, f] : parts) f *= c;
        return *this;
    }

    friend MixedForm operator+(MixedForm a, const MixedForm& b) { return a += b; }
    friend MixedForm operator-(MixedForm a, const MixedForm& b) { return a -= b; }
    friend MixedForm operator*(MixedForm a, const CRat& c) { return a *= c; }
    friend MixedForm operator*(const CRat& c, MixedForm a) { return a *= c; }

    friend MixedForm wedge(const MixedForm& a, const MixedForm& b) {
        MixedForm r(a.n ? a.n : b.n);
        for (const auto& [ka, fa] : a.parts)
            for (const auto& [kb, fb] : b.parts) r.add(wedge(fa, fb));
        return r;
    }

    friend bool operator==(const MixedForm& a, const MixedForm& b) {
        if (a.parts.size() != b.parts.size()) return false;
        for (const auto& [k, f] : a.parts) {
            auto it = b.parts.find(k);
            if (it == b.parts.end() || !(it->second == f)) return false;
        }
        return true;
    }
    friend bool operator!=(const MixedForm& a, const MixedForm& b) { return !(a == b); }
};

/// Element a + t∧b of the algebra extended by one odd generator t (t∧t = 0).
/// Multiplication: (a + t b)(c + t d) = ac + t(bc + (-1)^{deg a} ad),
/// with the sign applied per homogeneous summand of a.
struct ExtendedForm {
    MixedForm even, odd;

    ExtendedForm() = default;
    explicit ExtendedForm(int n) : even(n), odd(n) {}
    ExtendedForm(MixedForm e, MixedForm o) : even(std::move(e)), odd(std::move(o)) {}

    static ExtendedForm of_even(const AltForm& f) { return {MixedForm::of(f), MixedForm(f.n)}; }

    bool is_zero() const { return even.is_zero() && odd.is_zero(); }

    ExtendedForm& operator+=(const ExtendedForm& o) {
        even += o.even;
        odd += o.odd;
        return *this;
    }

    ExtendedForm& operator*=(const CRat& c) {
        even *= c;
        odd *= c;
        return *this;
    }

    friend ExtendedForm operator+(ExtendedForm a, const ExtendedForm& b) { return a += b; }
    friend ExtendedForm operator*(ExtendedForm a, const CRat& c) { return a *= c; }
    friend ExtendedForm operator*(const CRat& c, ExtendedForm a) { return a *= c; }

    friend ExtendedForm wedge(const ExtendedForm& a, const ExtendedForm& b) {
        ExtendedForm r;
        r.even = wedge(a.even, b.even);
        r.odd = wedge(a.odd, b.even);
        for (const auto& [k, f] : a.even.parts) {
            MixedForm signed_part = MixedForm::of((k.first + k.second) % 2 == 0 ? f : -f);
            r.odd += wedge(signed_part, b.odd);
        }
        if (r.even.n == 0) r.even.n = r.odd.n;
        if (r.odd.n == 0) r.odd.n = r.even.n;
        return r;
    }

    friend bool operator==(const ExtendedForm& a, const ExtendedForm& b) {
        return a.even == b.even && a.odd == b.odd;
    }
};

}  // namespace crinv
