#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Arithmetic in small finite fields F_q, q an odd prime power.
// Elements are integer encodings 0..q-1: the base-p digit vector of the
// polynomial representative modulo the lexicographically least monic
// irreducible polynomial of the right degree. For prime q this is the usual
// least nonnegative residue.

namespace sliceforge::gf {

struct BadField : std::runtime_error {
    explicit BadField(const std::string& w) : std::runtime_error(w) {}
};

struct GF {
    int q = 0, p = 0, k = 0;
    std::vector<int> modulus;  // monic irreducible, coefficients low..high, size k+1

    explicit GF(int q_);

    int add(int x, int y) const;
    int neg(int x) const;
    int sub(int x, int y) const { return add(x, neg(y)); }
    int mul(int x, int y) const;
    int pow(int x, long long e) const;
    int inv(int x) const;

    int from_integer(long long n) const;  // ring map Z -> F_q
    bool is_square(int x) const;          // x != 0 assumed
    int least_nonsquare() const;
    int primitive_root() const;
    // discrete log base primitive_root(); x != 0
    int dlog(int x) const;

    bool minus_one_is_square() const { return q % 4 == 1; }

  private:
    std::vector<int> decode(int x) const;
    int encode(const std::vector<int>& c) const;
    mutable std::vector<int> dlog_table_;  // built lazily, deterministic
    void build_dlog() const;
};

bool is_odd_prime_power(int q, int* p_out = nullptr, int* k_out = nullptr);

}  // namespace sliceforge::gf
