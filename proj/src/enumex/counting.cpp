#include <ordpat/counting.hpp>

#include <stdexcept>

namespace ordpat {

BigInt binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt factorial(int n)
{
    BigInt r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

BigInt lb_formula(int n)
{
    if (n < 0)
        throw std::invalid_argument("lb_formula: n must be non-negative");
    BigInt sum = 0;
    for (int k = 0; 2 * k <= n; ++k)
        sum += binomial(n, 2 * k) * factorial(k);
    return sum;
}

BigInt catalan(int k)
{
    if (k < 0)
        throw std::invalid_argument("catalan: k must be non-negative");
    return binomial(2 * k, k) / (k + 1);
}

BigInt telephone(int n)
{
    if (n < 0)
        throw std::invalid_argument("telephone: n must be non-negative");
    BigInt prev = 1, cur = 1;
    for (int i = 2; i <= n; ++i) {
        BigInt next = cur + (i - 1) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

BigInt g_d(int d, long long x)
{
    if (d < 1 || x < 0)
        throw std::invalid_argument("g_d: need d >= 1 and x >= 0");
    BigInt sum = 0;
    for (int i = 0; i < d; ++i)
        sum += (i + 1) * binomial(x, i);
    if (x > 3LL * d && !(sum < 2 * d * binomial(x, d - 1)))
        throw std::logic_error("g_d: bound 2D C(x, D-1) violated");
    return sum;
}

BigInt c_bound(int k)
{
    if (k < 1)
        throw std::invalid_argument("c_bound: k must be positive");
    BigInt k4 = BigInt(k) * k * k * k;
    return 2 * k4 * binomial(static_cast<long long>(k) * k, k);
}

Constants constants(int k)
{
    if (k < 1)
        throw std::invalid_argument("constants: k must be positive");
    Constants c;
    c.k = k;
    c.c_bound = c_bound(k);
    c.c_1 = 2 * c_bound(k + 1) + 1;
    BigInt k4 = BigInt(k) * k * k * k;
    BigInt top = 16 * k4 * k * k * c.c_1;
    long long k3 = static_cast<long long>(k) * k * k;
    c.c_k = 32 * k4 * binomial(top.convert_to<long long>(), 4 * k3);
    c.threshold_2_pow = BigInt(1) << static_cast<unsigned>(8 * k3);
    if (!(c.c_k > c.threshold_2_pow))
        throw std::logic_error("constants: c_k does not exceed 2^(8k^3)");
    return c;
}

namespace {

struct Recurrence {
    int k;
    long long t;
    long long base_limit;
    BigInt coefficient;
    BigInt linear;

    BigInt eval(long long n) const
    {
        if (n <= base_limit)
            return BigInt(n) << static_cast<unsigned>(n);
        long long m = (n + t - 1) / t;
        return coefficient * eval(m) + linear * n;
    }
};

} // namespace

BigInt f_recurrence_bound(int n, int k)
{
    if (n < 1 || k < 1)
        throw std::invalid_argument("f_recurrence_bound: need n, k >= 1");
    Recurrence r;
    r.k = k;
    r.t = 2LL * k * k;
    long long d = (2LL * k - 1) * r.t;
    r.base_limit = 8LL * k * k * k;
    r.coefficient = BigInt(2 * k - 1) * k;
    BigInt c1 = constants(k).c_1;
    BigInt x = 2 * binomial(d, 2) * c1;
    r.linear = binomial(r.t, 2LL * k) * (k - 1) + g_d(static_cast<int>(d), x.convert_to<long long>());
    return r.eval(n);
}

} // namespace ordpat
