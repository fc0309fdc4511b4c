#include "sliceforge/gf.hpp"

namespace sliceforge::gf {

bool is_odd_prime_power(int q, int* p_out, int* k_out)
{
    if (q < 3 || q % 2 == 0)
        return false;
    int p = 0;
    for (int d = 3; d * d <= q; d += 2)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0)
        p = q;
    int k = 0, m = q;
    while (m > 1) {
        if (m % p != 0)
            return false;
        m /= p;
        ++k;
    }
    // p found as least divisor, so it is prime
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
}

namespace {

// poly arithmetic over F_p, coefficients low..high
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& mod, int p)
{
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    const int k = static_cast<int>(mod.size()) - 1;
    for (int d = static_cast<int>(c.size()) - 1; d >= k; --d) {
        int coef = c[d];
        if (coef == 0)
            continue;
        for (int j = 0; j <= k; ++j) {
            int idx = d - k + j;
            c[idx] = ((c[idx] - coef * mod[j]) % p + p) % p;
        }
    }
    c.resize(k > 0 ? k : 1);
    return c;
}

// remainder of a modulo b over F_p, both coefficient-low-first, b monic
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p)
{
    int db = static_cast<int>(b.size()) - 1;
    for (int d = static_cast<int>(a.size()) - 1; d >= db; --d) {
        int coef = a[d];
        if (coef == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            a[d - db + j] = ((a[d - db + j] - coef * b[j]) % p + p) % p;
    }
    a.resize(db > 0 ? db : 1);
    return a;
}

bool poly_is_zero(const std::vector<int>& a)
{
    for (int c : a)
        if (c)
            return false;
    return true;
}

// irreducibility of a monic polynomial by trial division against all monic
// divisors of degree up to deg/2; the fields here are tiny
bool poly_irreducible(const std::vector<int>& f, int p)
{
    int k = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= k; ++d) {
        std::vector<int> g(d + 1, 0);
        g[d] = 1;
        long long total = 1;
        for (int i = 0; i < d; ++i)
            total *= p;
        for (long long n = 0; n < total; ++n) {
            long long m = n;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(m % p);
                m /= p;
            }
            if (poly_is_zero(poly_rem(f, g, p)))
                return false;
        }
    }
    return true;
}

// least monic irreducible of degree k over F_p
std::vector<int> least_irreducible(int p, int k)
{
    if (k == 1)
        return {0, 1};
    std::vector<int> f(k + 1, 0);
    f[k] = 1;
    // iterate over lower coefficients in lexicographic (low digit = fastest) order
    long long total = 1;
    for (int i = 0; i < k; ++i)
        total *= p;
    for (long long n = 0; n < total; ++n) {
        long long m = n;
        for (int i = 0; i < k; ++i) {
            f[i] = static_cast<int>(m % p);
            m /= p;
        }
        if (poly_irreducible(f, p))
            return f;
    }
    throw BadField("no irreducible polynomial found");
}

}  // namespace

GF::GF(int q_)
{
    if (!is_odd_prime_power(q_, &p, &k))
        throw BadField("q must be an odd prime power, got " + std::to_string(q_));
    q = q_;
    modulus = least_irreducible(p, k);
}

std::vector<int> GF::decode(int x) const
{
    std::vector<int> c(k, 0);
    for (int i = 0; i < k; ++i) {
        c[i] = x % p;
        x /= p;
    }
    return c;
}

int GF::encode(const std::vector<int>& c) const
{
    int x = 0;
    for (int i = k - 1; i >= 0; --i)
        x = x * p + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return x;
}

int GF::add(int x, int y) const
{
    auto a = decode(x), b = decode(y);
    for (int i = 0; i < k; ++i)
        a[i] = (a[i] + b[i]) % p;
    return encode(a);
}

int GF::neg(int x) const
{
    auto a = decode(x);
    for (int i = 0; i < k; ++i)
        a[i] = (p - a[i]) % p;
    return encode(a);
}

int GF::mul(int x, int y) const
{
    if (x == 0 || y == 0)
        return 0;
    return encode(poly_mulmod(decode(x), decode(y), modulus, p));
}

int GF::pow(int x, long long e) const
{
    int r = 1;
    long long m = e % (q - 1);
    if (m < 0)
        m += q - 1;
    while (m) {
        if (m & 1)
            r = mul(r, x);
        x = mul(x, x);
        m >>= 1;
    }
    return r;
}

int GF::inv(int x) const
{
    if (x == 0)
        throw BadField("inverse of zero");
    return pow(x, q - 2);
}

int GF::from_integer(long long n) const
{
    long long r = n % p;
    if (r < 0)
        r += p;
    return static_cast<int>(r);
}

bool GF::is_square(int x) const
{
    // x^((q-1)/2) == 1
    return pow(x, (q - 1) / 2) == 1;
}

int GF::least_nonsquare() const
{
    for (int x = 1; x < q; ++x)
        if (!is_square(x))
            return x;
    throw BadField("no nonsquare found");
}

int GF::primitive_root() const
{
    for (int g = 1; g < q; ++g) {
        int x = g;
        int ord = 1;
        while (x != 1) {
            x = mul(x, g);
            ++ord;
        }
        if (ord == q - 1)
            return g;
    }
    throw BadField("no primitive root found");
}

void GF::build_dlog() const
{
    if (!dlog_table_.empty())
        return;
    dlog_table_.assign(q, -1);
    int g = primitive_root();
    int x = 1;
    for (int e = 0; e < q - 1; ++e) {
        dlog_table_[x] = e;
        x = mul(x, g);
    }
}

int GF::dlog(int x) const
{
    if (x == 0)
        throw BadField("dlog of zero");
    build_dlog();
    return dlog_table_[x];
}

}  // namespace sliceforge::gf
