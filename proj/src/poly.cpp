#include "simplexgauss/poly.hpp"

#include <algorithm>
#include <cctype>

namespace simplexgauss {

int degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!is_zero(p[i])) return i;
    return -1;
}

void normalize(Poly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

Poly poly_from_integers(const std::vector<Integer>& coeffs) {
    Poly p;
    p.reserve(coeffs.size());
    for (const auto& c : coeffs) p.emplace_back(c);
    normalize(p);
    return p;
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    normalize(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    normalize(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    normalize(r);
    return r;
}

Poly scale(const Poly& a, const Rational& c) {
    if (is_zero(c)) return {};
    Poly r = a;
    for (auto& x : r) x *= c;
    return r;
}

Poly derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rational(static_cast<long>(i));
    normalize(r);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    int db = degree(b);
    if (db < 0) throw std::domain_error("polynomial division by zero");
    Poly rem = a;
    normalize(rem);
    int dr = degree(rem);
    if (dr < db) return {{}, rem};
    Poly quot(dr - db + 1, Rational(0));
    while ((dr = degree(rem)) >= db) {
        Rational t = rem[dr] / b[db];
        quot[dr - db] = t;
        for (int i = 0; i <= db; ++i) rem[dr - db + i] -= t * b[i];
        rem[dr] = 0;  // kill rounding-free residue exactly
        normalize(rem);
    }
    normalize(quot);
    return {quot, rem};
}

static void make_monic(Poly& p) {
    int d = degree(p);
    if (d < 0) return;
    Rational lead = p[d];
    for (auto& c : p) c /= lead;
}

Poly poly_gcd(Poly a, Poly b) {
    normalize(a);
    normalize(b);
    while (degree(b) >= 0) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
        make_monic(b);  // keeps coefficient growth in check
    }
    make_monic(a);
    return a;
}

ExtGcd poly_ext_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    normalize(r0);
    normalize(r1);
    Poly s0 = {Rational(1)}, s1 = {};
    Poly t0 = {}, t1 = {Rational(1)};
    while (degree(r1) >= 0) {
        auto [q, r] = divmod(r0, r1);
        Poly s = sub(s0, mul(q, s1));
        Poly t = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    int d = degree(r0);
    if (d >= 0) {
        Rational lead = r0[d];
        for (auto& c : r0) c /= lead;
        for (auto& c : s0) c /= lead;
        for (auto& c : t0) c /= lead;
    }
    return {r0, s0, t0};
}

Rational eval(const Poly& p, const Rational& x) {
    Rational acc(0);
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

RatInterval eval_interval(const Poly& p, const Rational& lo, const Rational& hi) {
    RatInterval acc{Rational(0), Rational(0)};
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
        // acc * [lo,hi] + c, monotone endpoints via case analysis
        Rational cands[4] = {acc.lo * lo, acc.lo * hi, acc.hi * lo, acc.hi * hi};
        Rational mn = cands[0], mx = cands[0];
        for (int k = 1; k < 4; ++k) {
            if (cands[k] < mn) mn = cands[k];
            if (cands[k] > mx) mx = cands[k];
        }
        acc.lo = mn + p[i];
        acc.hi = mx + p[i];
    }
    return acc;
}

static int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    int vars = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sgn(eval(q, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

int sturm_count(const Poly& p, const Rational& lo, const Rational& hi) {
    if (is_zero(eval(p, lo)) || is_zero(eval(p, hi)))
        throw std::domain_error("sturm_count: polynomial vanishes at an endpoint");
    std::vector<Poly> chain;
    chain.push_back(p);
    chain.push_back(derivative(p));
    while (degree(chain.back()) >= 0) {
        Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (degree(r) < 0) break;
        for (auto& c : r) c = -c;
        make_monic(r);  // scaling by a positive constant preserves the chain
        chain.push_back(std::move(r));
    }
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

bool is_squarefree(const Poly& p) {
    if (degree(p) <= 0) return false;
    return degree(poly_gcd(p, derivative(p))) == 0;
}

// ---- irreducibility certificate mod p ------------------------------------

namespace {

using ModPoly = std::vector<unsigned long>;  // ascending coeffs mod p

int mdeg(const ModPoly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % p);
}

unsigned long powmod(unsigned long a, unsigned long e, unsigned long p) {
    unsigned long r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

ModPoly mod_rem(ModPoly a, const ModPoly& f, unsigned long p) {
    int df = mdeg(f);
    unsigned long inv_lead = powmod(f[df], p - 2, p);
    int da;
    while ((da = mdeg(a)) >= df) {
        unsigned long t = mulmod(a[da], inv_lead, p);
        for (int i = 0; i <= df; ++i) {
            unsigned long s = mulmod(t, f[i], p);
            a[da - df + i] = (a[da - df + i] + p - s) % p;
        }
    }
    a.resize(df > 0 ? df : 1, 0);
    return a;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const ModPoly& f, unsigned long p) {
    ModPoly r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<unsigned long>(
                                       (static_cast<unsigned __int128>(a[i]) * b[j]) % p)) %
                       p;
    }
    return mod_rem(std::move(r), f, p);
}

ModPoly mod_gcd(ModPoly a, ModPoly b, unsigned long p) {
    while (mdeg(b) >= 0) {
        ModPoly r = mod_rem(a, b, p);
        r.resize(std::max<size_t>(1, b.size()), 0);
        a = std::move(b);
        // reduce r mod a
        if (mdeg(r) >= mdeg(a) && mdeg(a) >= 0) r = mod_rem(std::move(r), a, p);
        b = std::move(r);
    }
    return a;
}

// x^(p^k) mod f via repeated frobenius, all mod p
ModPoly frobenius_power(const ModPoly& f, unsigned long p, int k) {
    int d = mdeg(f);
    ModPoly x(d > 1 ? d : 2, 0);
    x[1] = 1 % p;
    ModPoly cur = x;
    for (int i = 0; i < k; ++i) {
        // cur = cur^p mod f by square-and-multiply on the exponent p
        ModPoly acc(1, 1);
        ModPoly base = cur;
        unsigned long e = p;
        while (e) {
            if (e & 1) acc = mod_mul(acc, base, f, p);
            base = mod_mul(base, base, f, p);
            e >>= 1;
        }
        cur = std::move(acc);
    }
    return cur;
}

bool irreducible_mod(const std::vector<Integer>& coeffs, unsigned long p) {
    int d = static_cast<int>(coeffs.size()) - 1;
    ModPoly f(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Integer c = coeffs[i] % static_cast<long>(p);
        if (c < 0) c += static_cast<long>(p);
        f[i] = c.get_ui();
    }
    if (mdeg(f) != d) return false;  // leading coefficient vanished mod p
    // squarefree mod p?
    ModPoly df(f.size(), 0);
    for (int i = 1; i <= d; ++i) df[i - 1] = mulmod(f[i], i % p, p);
    df.pop_back();
    if (df.empty()) df.assign(1, 0);
    if (mdeg(mod_gcd(f, df, p)) != 0) return false;
    // Rabin test: x^(p^d) == x mod f and gcd(x^(p^(d/q)) - x, f) = 1 for prime q | d
    ModPoly xp = frobenius_power(f, p, d);
    ModPoly x(2, 0);
    x[1] = 1;
    ModPoly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    if (mdeg(diff) >= 0) return false;
    for (int q = 2; q <= d; ++q) {
        if (d % q != 0) continue;
        bool isprime = true;
        for (int t = 2; t * t <= q; ++t)
            if (q % t == 0) isprime = false;
        if (!isprime) continue;
        ModPoly xk = frobenius_power(f, p, d / q);
        ModPoly dk = xk;
        if (dk.size() < 2) dk.resize(2, 0);
        dk[1] = (dk[1] + p - 1) % p;
        if (mdeg(dk) < 0) return false;
        if (mdeg(mod_gcd(f, dk, p)) != 0) return false;
    }
    return true;
}

}  // namespace

bool irreducible_mod_prime_certificate(const std::vector<Integer>& coeffs) {
    if (coeffs.size() <= 1) return false;
    if (coeffs.size() == 2) return true;  // linear over Q
    static const unsigned long primes[] = {1000003ul, 1000033ul, 1000037ul, 1000039ul};
    for (unsigned long p : primes)
        if (irreducible_mod(coeffs, p)) return true;
    return false;
}

std::vector<Rational> rational_roots(const std::vector<Integer>& coeffs) {
    std::vector<Rational> roots;
    Poly p = poly_from_integers(coeffs);
    int d = degree(p);
    if (d < 0) return roots;
    // strip x^k factors
    size_t low = 0;
    while (low < coeffs.size() && is_zero(coeffs[low])) ++low;
    if (low > 0) roots.emplace_back(0);
    if (low >= coeffs.size() - 1) return roots;
    Integer a0 = coeffs[low], an = coeffs.back();
    std::vector<Integer> ps, qs;
    for (Integer i = 1; i * i <= abs(a0); ++i)
        if (a0 % i == 0) {
            ps.push_back(i);
            ps.push_back(abs(a0) / i);
        }
    for (Integer i = 1; i * i <= abs(an); ++i)
        if (an % i == 0) {
            qs.push_back(i);
            qs.push_back(abs(an) / i);
        }
    for (const auto& pn : ps)
        for (const auto& qn : qs) {
            for (int s : {1, -1}) {
                Rational cand = make_rational(s * pn, qn);
                if (is_zero(eval(p, cand))) {
                    if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
        }
    return roots;
}

}  // namespace simplexgauss
