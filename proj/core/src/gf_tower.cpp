#include "sumrank/gf_tower.hpp"

#include <algorithm>
#include <array>
#include <cstring>

namespace sumrank {

namespace {

constexpr std::uint64_t kTableLimit = 1u << 20;
constexpr unsigned kMaxDigits = 48;

const char* errc_names[] = {
    "InvalidArgument",
    "NonPrimeP",
    "EllNotDividingQMinus1",
    "BadDegree",
    "DivByZero",
    "ZeroBeta",
    "ZeroEntry",
    "BadSubfieldDegree",
    "LengthMismatch",
    "PDividesEll",
    "NonCoprimeFactors",
    "ComponentCountMismatch",
    "NotRootOfUnity",
    "BadPartition",
    "BudgetExceeded",
    "NotMonic",
    "NotDivisor",
    "RequiresNEqualsM",
    "ConjugateEvaluationPoints",
    "DependentBasis",
    "AssumptionViolated",
    "VerificationFailed",
    "CrossCheckMismatch",
    "WeightInfeasible",
    "ParseError",
};

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t k, std::uint64_t mod) {
    if (mod == 1) return 0;
    unsigned __int128 acc = 1, base = b % mod;
    while (k) {
        if (k & 1) acc = acc * base % mod;
        base = base * base % mod;
        k >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

// Dense polynomial over F_p, the ground arithmetic used for the modulus search
// and as a fallback for towers without lookup tables.
struct DigitPoly {
    std::array<unsigned, 2 * kMaxDigits> c{};
    unsigned len = 0;

    void trim() {
        while (len > 0 && c[len - 1] == 0) --len;
    }
};

DigitPoly decode_poly(Felem v, unsigned p) {
    DigitPoly out;
    unsigned i = 0;
    while (v) {
        out.c[i++] = static_cast<unsigned>(v % p);
        v /= p;
    }
    out.len = i;
    return out;
}

Felem encode_poly(const DigitPoly& f, unsigned p) {
    Felem v = 0;
    for (unsigned i = f.len; i-- > 0;) v = v * p + f.c[i];
    return v;
}

DigitPoly mulmod_poly(const DigitPoly& a, const DigitPoly& b, const std::vector<unsigned>& mod,
                      unsigned p) {
    DigitPoly prod;
    prod.len = (a.len && b.len) ? a.len + b.len - 1 : 0;
    for (unsigned i = 0; i < a.len; ++i) {
        if (!a.c[i]) continue;
        for (unsigned j = 0; j < b.len; ++j)
            prod.c[i + j] = (prod.c[i + j] + a.c[i] * b.c[j]) % p;
    }
    const unsigned d = static_cast<unsigned>(mod.size()) - 1;
    for (unsigned i = prod.len; i-- > d;) {
        unsigned t = prod.c[i];
        if (!t) continue;
        prod.c[i] = 0;
        for (unsigned j = 0; j < d; ++j) {
            if (!mod[j]) continue;
            unsigned sub = (t * mod[j]) % p;
            prod.c[i - d + j] = (prod.c[i - d + j] + p - sub) % p;
        }
    }
    prod.len = std::min(prod.len, d);
    prod.trim();
    return prod;
}

DigitPoly powmod_poly(DigitPoly base, std::uint64_t k, const std::vector<unsigned>& mod,
                      unsigned p) {
    DigitPoly acc;
    acc.c[0] = 1;
    acc.len = 1;
    while (k) {
        if (k & 1) acc = mulmod_poly(acc, base, mod, p);
        base = mulmod_poly(base, base, mod, p);
        k >>= 1;
    }
    return acc;
}

std::vector<unsigned> poly_gcd_fp(std::vector<unsigned> a, std::vector<unsigned> b, unsigned p) {
    auto deg = [](const std::vector<unsigned>& f) {
        int d = static_cast<int>(f.size()) - 1;
        while (d >= 0 && f[static_cast<unsigned>(d)] == 0) --d;
        return d;
    };
    auto inv_fp = [p](unsigned x) {
        unsigned r = 1, base = x;
        for (unsigned k = p - 2; k; k >>= 1) {
            if (k & 1) r = r * base % p;
            base = base * base % p;
        }
        return r;
    };
    while (true) {
        int db = deg(b);
        if (db < 0) return a;
        int da = deg(a);
        while (da >= db) {
            unsigned f = a[static_cast<unsigned>(da)] * inv_fp(b[static_cast<unsigned>(db)]) % p;
            for (int i = 0; i <= db; ++i) {
                unsigned idx = static_cast<unsigned>(da - db + i);
                a[idx] = (a[idx] + p - f * b[static_cast<unsigned>(i)] % p) % p;
            }
            da = deg(a);
        }
        std::swap(a, b);
    }
}

bool is_irreducible(const std::vector<unsigned>& f, unsigned p) {
    const unsigned d = static_cast<unsigned>(f.size()) - 1;
    DigitPoly x;
    x.c[1] = 1;
    x.len = 2;
    std::vector<DigitPoly> iterates(d + 1);  // iterates[k] = x^{p^k} mod f
    iterates[0] = x;
    DigitPoly t = x;
    for (unsigned k = 1; k <= d; ++k) {
        t = powmod_poly(t, p, f, p);
        iterates[k] = t;
    }
    auto minus_x = [p](DigitPoly g) {
        if (g.len < 2) g.len = 2;
        g.c[1] = (g.c[1] + p - 1) % p;
        g.trim();
        return g;
    };
    if (minus_x(iterates[d]).len != 0) return false;  // x^{p^d} != x mod f
    for (std::uint64_t r : prime_factors(d)) {
        DigitPoly g = minus_x(iterates[d / r]);
        if (g.len == 0) return false;  // f divides x^{p^{d/r}} - x
        std::vector<unsigned> gv(g.c.begin(), g.c.begin() + g.len);
        auto gcd = poly_gcd_fp(gv, f, p);
        int dg = static_cast<int>(gcd.size()) - 1;
        while (dg >= 0 && gcd[static_cast<unsigned>(dg)] == 0) --dg;
        if (dg != 0) return false;
    }
    return true;
}

}  // namespace

const char* errc_name(Errc code) { return errc_names[static_cast<int>(code)]; }

Tower Tower::build(unsigned p, unsigned e, unsigned m, unsigned s, unsigned ell) {
    require(is_prime(p), Errc::non_prime_p, "p = " + std::to_string(p) + " is not prime");
    require(e >= 1 && m >= 1 && s >= 1 && ell >= 1, Errc::invalid_argument,
            "e, m, s, ell must be positive");
    Tower tw;
    tw.par_ = {p, e, m, s, ell, e * s * m};
    require(tw.par_.big_degree <= 40, Errc::invalid_argument,
            "field degree beyond supported range");
    tw.q0_ = 1;
    for (unsigned i = 0; i < e; ++i) tw.q0_ *= p;
    tw.q_ = 1;
    for (unsigned i = 0; i < s; ++i) tw.q_ *= tw.q0_;
    tw.size_ = 1;
    for (unsigned i = 0; i < tw.par_.big_degree; ++i) {
        require(tw.size_ <= (std::uint64_t(1) << 56) / p, Errc::invalid_argument,
                "field too large");
        tw.size_ *= p;
    }
    tw.f_size_ = 1;
    for (unsigned i = 0; i < e * m; ++i) tw.f_size_ *= p;
    require((tw.q_ - 1) % ell == 0, Errc::ell_not_dividing_q_minus_1,
            "ell = " + std::to_string(ell) + " does not divide q-1 = " + std::to_string(tw.q_ - 1));
    require(ell % p != 0, Errc::p_divides_ell, "gcd(p, ell) must be 1");

    // Lexicographically smallest monic irreducible modulus of degree big_degree.
    const unsigned d = tw.par_.big_degree;
    if (d == 1) {
        tw.mod_ = {0, 1};  // the ambient field is F_p itself
    } else {
        std::uint64_t low_count = 1;
        for (unsigned i = 0; i < d; ++i) low_count *= p;
        std::vector<unsigned> f(d + 1, 0);
        f[d] = 1;
        bool found = false;
        for (std::uint64_t low = 0; low < low_count && !found; ++low) {
            std::uint64_t v = low;
            for (unsigned i = 0; i < d; ++i) {
                f[i] = static_cast<unsigned>(v % p);
                v /= p;
            }
            if (f[0] == 0) continue;
            if (is_irreducible(f, p)) found = true;
        }
        require(found, Errc::invalid_argument, "no irreducible modulus found");
        tw.mod_ = f;
    }

    tw.pk_mod_.resize(d + 1);
    for (unsigned k = 0; k <= d; ++k) tw.pk_mod_[k] = powmod_u64(p, k, tw.size_ - 1);
    tw.group_factors_ = prime_factors(tw.size_ - 1);

    tw.init_tables();

    if (tw.size_ <= kTableLimit) {
        tw.full_ = true;
        for (unsigned dd = 1; dd <= d; ++dd) {
            if (d % dd) continue;
            tw.sub_degrees_.push_back(dd);
            std::vector<Felem> elems;
            for (Felem x = 0; x < tw.size_; ++x)
                if (tw.in_subfield(x, dd)) elems.push_back(x);
            tw.sub_elements_.push_back(std::move(elems));
        }
        tw.pick_distinguished();
        tw.views_.push_back(tw.make_view(e, e * m));
        tw.views_.push_back(tw.make_view(e * s, e * s * m));
        tw.views_.push_back(tw.make_view(e * m, e * s * m));
    }
    return tw;
}

void Tower::init_tables() {
    if (size_ > kTableLimit || size_ == 2) return;
    const std::uint64_t grp = size_ - 1;
    Felem gen = 0;
    for (Felem g = 2; g < size_; ++g) {
        bool ok = true;
        for (auto r : group_factors_)
            if (pow_raw(g, grp / r) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen = g;
            break;
        }
    }
    require(gen != 0, Errc::invalid_argument, "no multiplicative generator found");
    exp_.resize(2 * grp);
    log_.assign(size_, 0);
    Felem cur = 1;
    for (std::uint64_t i = 0; i < grp; ++i) {
        exp_[i] = static_cast<std::uint32_t>(cur);
        exp_[i + grp] = static_cast<std::uint32_t>(cur);
        log_[cur] = static_cast<std::uint32_t>(i);
        cur = mul_raw(cur, gen);
    }
    tables_ = true;
}

void Tower::pick_distinguished() {
    if (par_.ell == 1) {
        root_unity_ = 1;
    } else {
        auto lf = prime_factors(par_.ell);
        root_unity_ = 0;
        for (Felem x = 2; x < size_; ++x) {
            if (pow(x, par_.ell) != 1) continue;
            bool exact = true;
            for (auto r : lf)
                if (pow(x, par_.ell / r) == 1) {
                    exact = false;
                    break;
                }
            if (exact) {
                root_unity_ = x;
                break;
            }
        }
        require(root_unity_ != 0, Errc::invalid_argument, "no primitive root of unity found");
    }

    normal_ = 0;
    for (Felem x = 1; x < size_; ++x) {
        if (is_normal(x)) {
            normal_ = x;
            break;
        }
    }
    require(normal_ != 0, Errc::invalid_argument, "no normal element found");
}

bool Tower::is_normal(Felem beta) const {
    if (beta == 0) return false;
    const auto& fq = subfield_elements(deg_fq());
    std::vector<bool> in_span(size_, false);
    in_span[0] = true;
    std::vector<Felem> span{0};
    span.reserve(static_cast<std::size_t>(size_));
    Felem orb = beta;
    for (unsigned k = 0; k < par_.m; ++k) {
        if (in_span[orb]) return false;
        const std::size_t old = span.size();
        for (std::size_t i = 0; i < old; ++i)
            for (std::size_t ci = 1; ci < fq.size(); ++ci) {
                Felem v = add(span[i], mul(fq[ci], orb));
                if (!in_span[v]) {
                    in_span[v] = true;
                    span.push_back(v);
                }
            }
        orb = sigma(orb, 1);
    }
    return true;
}

Felem Tower::add(Felem a, Felem b) const {
    if (par_.p == 2) return a ^ b;
    Felem out = 0, mult = 1;
    const unsigned p = par_.p;
    for (unsigned i = 0; i < par_.big_degree && (a || b); ++i) {
        out += ((a % p + b % p) % p) * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    return out;
}

Felem Tower::neg(Felem a) const {
    if (par_.p == 2) return a;
    Felem out = 0, mult = 1;
    const unsigned p = par_.p;
    for (unsigned i = 0; i < par_.big_degree && a; ++i) {
        out += ((p - a % p) % p) * mult;
        a /= p;
        mult *= p;
    }
    return out;
}

Felem Tower::sub(Felem a, Felem b) const { return add(a, neg(b)); }

Felem Tower::mul_raw(Felem a, Felem b) const {
    if (a == 0 || b == 0) return 0;
    if (par_.p == 2) {
        unsigned __int128 prod = 0;
        const unsigned __int128 bb = b;
        for (unsigned i = 0; i < par_.big_degree; ++i)
            if ((a >> i) & 1) prod ^= bb << i;
        unsigned __int128 modbits = 0;
        for (unsigned i = 0; i <= par_.big_degree; ++i)
            if (mod_[i]) modbits |= static_cast<unsigned __int128>(1) << i;
        for (int bit = 2 * static_cast<int>(par_.big_degree) - 2;
             bit >= static_cast<int>(par_.big_degree); --bit) {
            if ((prod >> bit) & 1) prod ^= modbits << (bit - par_.big_degree);
        }
        return static_cast<Felem>(prod) & ((Felem(1) << par_.big_degree) - 1);
    }
    DigitPoly pa = decode_poly(a, par_.p), pb = decode_poly(b, par_.p);
    return encode_poly(mulmod_poly(pa, pb, mod_, par_.p), par_.p);
}

Felem Tower::mul(Felem a, Felem b) const {
    if (tables_) {
        if (a == 0 || b == 0) return 0;
        return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
    }
    return mul_raw(a, b);
}

Felem Tower::pow_raw(Felem a, std::uint64_t k) const {
    Felem acc = 1;
    while (k) {
        if (k & 1) acc = mul_raw(acc, a);
        a = mul_raw(a, a);
        k >>= 1;
    }
    return acc;
}

Felem Tower::pow(Felem a, std::uint64_t k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    if (tables_) {
        const std::uint64_t grp = size_ - 1;
        unsigned __int128 idx = static_cast<unsigned __int128>(log_[a]) * (k % grp);
        return exp_[static_cast<std::uint64_t>(idx % grp)];
    }
    return pow_raw(a, k);
}

Felem Tower::inv(Felem a) const {
    require(a != 0, Errc::div_by_zero, "inverse of zero");
    if (size_ == 2) return 1;
    if (tables_) {
        const std::uint64_t grp = size_ - 1;
        return exp_[(grp - log_[a]) % grp];
    }
    return pow_raw(a, size_ - 2);
}

Felem Tower::sigma(Felem x, long k) const {
    if (x == 0 || x == 1) return x;
    long km = k % static_cast<long>(par_.m);
    if (km < 0) km += par_.m;
    return frob_q0(x, km * static_cast<long>(par_.s));
}

Felem Tower::frob_q0(Felem x, long v) const {
    if (x == 0 || x == 1) return x;
    const long order = static_cast<long>(par_.s) * par_.m;  // q0^{sm} = id ambient
    long vm = v % order;
    if (vm < 0) vm += order;
    std::uint64_t expo = powmod_u64(q0_, static_cast<std::uint64_t>(vm), size_ - 1);
    return pow(x, expo);
}

bool Tower::in_subfield(Felem x, unsigned d) const {
    require(d >= 1 && par_.big_degree % d == 0, Errc::bad_degree,
            "subfield degree must divide big_degree");
    if (x == 0 || x == 1) return true;
    return pow(x, pk_mod_[d]) == x;
}

const std::vector<Felem>& Tower::subfield_elements(unsigned d) const {
    for (std::size_t i = 0; i < sub_degrees_.size(); ++i)
        if (sub_degrees_[i] == d) return sub_elements_[i];
    raise(Errc::bad_degree, "no subfield element list for this degree");
}

Felem Tower::primitive_root_of_unity() const {
    require(full_, Errc::invalid_argument, "tower too large for element machinery");
    return root_unity_;
}

Felem Tower::normal_element() const {
    require(full_, Errc::invalid_argument, "tower too large for element machinery");
    return normal_;
}

std::uint64_t Tower::mul_order(Felem x) const {
    require(x != 0, Errc::div_by_zero, "order of zero");
    std::uint64_t ord = size_ - 1;
    for (auto r : group_factors_)
        while (ord % r == 0 && pow(x, ord / r) == 1) ord /= r;
    return ord;
}

Tower::SubfieldView Tower::make_view(unsigned dk, unsigned dl) const {
    require(dl % dk == 0 && par_.big_degree % dl == 0, Errc::bad_degree, "bad view degrees");
    SubfieldView v;
    v.dk = dk;
    v.dl = dl;
    v.dim = dl / dk;
    const auto& kelems = subfield_elements(dk);
    const auto& lelems = subfield_elements(dl);
    std::vector<bool> in_span(size_, false);
    in_span[0] = true;
    std::vector<Felem> span{0};
    for (Felem cand : lelems) {
        if (v.basis.size() == v.dim) break;
        if (in_span[cand]) continue;
        v.basis.push_back(cand);
        const std::size_t old = span.size();
        for (std::size_t i = 0; i < old; ++i)
            for (std::size_t ci = 1; ci < kelems.size(); ++ci) {
                Felem w = add(span[i], mul(kelems[ci], cand));
                if (!in_span[w]) {
                    in_span[w] = true;
                    span.push_back(w);
                }
            }
    }
    require(v.basis.size() == v.dim, Errc::bad_degree, "basis construction failed");
    v.coords_flat.assign(static_cast<std::size_t>(size_) * v.dim, 0);
    std::uint64_t total = 1;
    for (unsigned i = 0; i < v.dim; ++i) total *= kelems.size();
    std::vector<Felem> cds(v.dim);
    for (std::uint64_t it = 0; it < total; ++it) {
        std::uint64_t t = it;
        Felem elem = 0;
        for (unsigned i = 0; i < v.dim; ++i) {
            cds[i] = kelems[t % kelems.size()];
            t /= kelems.size();
            elem = add(elem, mul(cds[i], v.basis[i]));
        }
        for (unsigned i = 0; i < v.dim; ++i) v.coords_flat[elem * v.dim + i] = cds[i];
    }
    return v;
}

const Tower::SubfieldView& Tower::view(unsigned dk, unsigned dl) const {
    for (const auto& v : views_)
        if (v.dk == dk && v.dl == dl) return v;
    raise(Errc::bad_degree, "no precomputed view for this subfield pair");
}

void Tower::coords(const SubfieldView& v, Felem x, Felem* out) const {
    const Felem* row = &v.coords_flat[x * v.dim];
    std::memcpy(out, row, v.dim * sizeof(Felem));
}

Felem Tower::from_coords(const SubfieldView& v, const Felem* in) const {
    Felem out = 0;
    for (unsigned i = 0; i < v.dim; ++i) out = add(out, mul(in[i], v.basis[i]));
    return out;
}

namespace {
const char* kDigitChars = "0123456789abcdefghijklmnopqrstuvwxyz";
}

std::string Tower::elem_to_text(Felem x) const {
    std::string out(par_.big_degree, '0');
    for (unsigned i = 0; i < par_.big_degree; ++i) {
        out[par_.big_degree - 1 - i] = kDigitChars[x % par_.p];
        x /= par_.p;
    }
    return out;
}

Felem Tower::elem_from_text(const std::string& text) const {
    require(!text.empty() && text.size() <= par_.big_degree, Errc::parse_error,
            "element text has wrong length");
    Felem v = 0;
    for (char ch : text) {
        const char* pos = std::strchr(kDigitChars, ch);
        require(pos != nullptr && static_cast<unsigned>(pos - kDigitChars) < par_.p,
                Errc::parse_error, "bad element digit");
        v = v * par_.p + static_cast<Felem>(pos - kDigitChars);
    }
    return v;
}

std::string Tower::to_text() const {
    std::string mod_text(par_.big_degree + 1, '0');
    for (unsigned i = 0; i <= par_.big_degree; ++i)
        mod_text[par_.big_degree - i] = kDigitChars[mod_[i]];
    return "p=" + std::to_string(par_.p) + ",e=" + std::to_string(par_.e) +
           ",m=" + std::to_string(par_.m) + ",s=" + std::to_string(par_.s) +
           ",ell=" + std::to_string(par_.ell) + ",modulus=" + mod_text;
}

Tower Tower::from_text(const std::string& text) {
    unsigned vals[5] = {0, 0, 0, 0, 0};
    const char* keys[5] = {"p=", "e=", "m=", "s=", "ell="};
    std::size_t pos = 0;
    for (int i = 0; i < 5; ++i) {
        std::size_t at = text.find(keys[i], pos);
        require(at != std::string::npos, Errc::parse_error, "bad tower text");
        at += std::strlen(keys[i]);
        vals[i] = static_cast<unsigned>(std::stoul(text.substr(at)));
        pos = at;
    }
    Tower tw = build(vals[0], vals[1], vals[2], vals[3], vals[4]);
    std::size_t at = text.find("modulus=");
    if (at != std::string::npos) {
        std::string given = text.substr(at + 8);
        if (auto comma = given.find(','); comma != std::string::npos) given.resize(comma);
        std::string mine = tw.to_text();
        require(mine.substr(mine.find("modulus=") + 8) == given, Errc::parse_error,
                "tower text modulus does not match the canonical modulus");
    }
    return tw;
}

}  // namespace sumrank
