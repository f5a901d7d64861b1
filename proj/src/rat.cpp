#include "ksendo/rat.hpp"
#include "ksendo/errors.hpp"

#include <algorithm>

namespace ksendo {

mpq_class parse_rational(const std::string& s) {
    std::string t = s;
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
    if (t.empty()) throw ValidationError("empty rational literal");
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw ValidationError("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool rational_sqrt(const mpq_class& x, mpq_class& root) {
    if (sgn(x) < 0) return false;
    if (sgn(x) == 0) { root = 0; return true; }
    mpz_class n = x.get_num(), d = x.get_den(), rn, rd;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    if (!mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = mpq_class(rn, rd);
    root.canonicalize();
    return true;
}

mpz_class squarefree_part(const mpq_class& x) {
    if (sgn(x) == 0) throw DomainError("squarefree_part(0)");
    mpz_class n = x.get_num() * x.get_den();
    int s = sgn(n);
    n = abs(n);
    mpz_class sf = 1;
    for (auto& [p, e] : factor_integer(n))
        if (e % 2) sf *= p;
    return s < 0 ? -sf : sf;
}

bool is_probable_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

mpz_class pollard_rho(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    mpz_class x = 2, y = 2, d = 1, c = 1;
    while (true) {
        x = 2; y = 2; d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
        c += 1;
    }
}

void factor_rec(const mpz_class& n, std::vector<mpz_class>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) { out.push_back(n); return; }
    mpz_class d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n) {
    n = abs(n);
    if (n <= 1) return {};
    std::vector<mpz_class> primes;
    // strip small primes first, rho for the rest
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.push_back(mpz_class(p));
            n /= mpz_class(p);
        }
    }
    factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<mpz_class, unsigned>> out;
    for (auto& p : primes) {
        if (!out.empty() && out.back().first == p) out.back().second++;
        else out.push_back({p, 1});
    }
    return out;
}

} // namespace ksendo
