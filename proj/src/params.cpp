#include "neumaier/params.hpp"

#include "json.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace neumaier {

namespace {

using i128 = __int128;

// Floor square root of a non-negative value, exact for the full range.
i128 isqrt(i128 n)
{
    if (n < 2)
        return n;
    i128 lo = 1, hi = n;
    if (hi > (i128{1} << 62))
        hi = i128{1} << 62;
    while (lo < hi) {
        i128 mid = lo + (hi - lo + 1) / 2;
        if (mid <= n / mid)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

std::optional<i128> exact_sqrt(i128 n)
{
    if (n < 0)
        return std::nullopt;
    auto r = isqrt(n);
    if (r * r != n)
        return std::nullopt;
    return r;
}

// Largest root of a*y^2 + b*y + c with a > 0, if it is an integer.
std::optional<std::int64_t> largest_integer_root(i128 a, i128 b, i128 c)
{
    auto d = exact_sqrt(b * b - 4 * a * c);
    if (!d)
        return std::nullopt;
    i128 num = -b + *d;
    if (num % (2 * a) != 0)
        return std::nullopt;
    return static_cast<std::int64_t>(num / (2 * a));
}

} // namespace

std::int64_t cap_poly(const ErgParams& tau, std::int64_t x, std::int64_t y)
{
    const auto [v, k, l] = tau;
    return x * (x + 1) * (v - y) - 2 * x * y * (k - y + 1) + y * (y - 1) * (l - y + 2);
}

std::optional<std::int64_t> solve_s(const ErgParams& tau)
{
    const i128 v = tau.v, k = tau.k, l = tau.lambda;
    const i128 a = v - 2 * k + l;
    const i128 b = k * k + 3 * k - l - v * (l + 2);
    const i128 c = v * (l + 1 - k);

    std::optional<std::int64_t> s;
    if (a > 0)
        s = largest_integer_root(a, b, c);
    else if (a < 0)
        s = largest_integer_root(-a, -b, -c);
    else if (b != 0) {
        if (c % b == 0)
            s = static_cast<std::int64_t>(-c / b);
    } else {
        auto pairs = cap_zero_pairs(tau);
        if (!pairs.empty())
            s = std::max_element(pairs.begin(), pairs.end(),
                                 [](auto& p, auto& q) { return p.second < q.second; })
                    ->second;
    }
    if (s && *s < 2)
        return std::nullopt;
    return s;
}

std::optional<std::int64_t> solve_m(std::int64_t v, std::int64_t s, std::int64_t lambda)
{
    const i128 a = v - s;
    const i128 c = i128{s} * (s - 1) * (lambda - s + 2);
    if (a <= 0)
        return std::nullopt;
    auto m = largest_integer_root(a, -a, -c);
    if (m && *m < 1)
        return std::nullopt;
    return m;
}

bool satisfies_vklam(const ErgParams& tau)
{
    const auto [v, k, l] = tau;
    if (!(v > k && k > l && l >= 0))
        return false;
    if (v < 2 * k - l)
        return false;
    return (v * k) % 2 == 0 && (k * l) % 2 == 0 && (v * k * l) % 6 == 0;
}

std::string to_string(Rule rule)
{
    switch (rule) {
    case Rule::Erg1: return "Erg1";
    case Rule::Erg2: return "Erg2";
    case Rule::Erg3: return "Erg3";
    case Rule::Lam: return "Lam";
    case Rule::Ksm: return "Ksm";
    }
    return "?";
}

std::string to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::ErgEmptyOrExtremal: return "ErgEmptyOrExtremal";
    case Verdict::NgExtremal: return "NgExtremal";
    case Verdict::NgEmpty: return "NgEmpty";
    case Verdict::Open: return "Open";
    }
    return "?";
}

const std::vector<SrgParams>& triangle_free_srg_catalog()
{
    static const std::vector<SrgParams> catalog = {
        {5, 2, 0, 1}, {10, 3, 0, 1}, {16, 5, 0, 2}, {50, 7, 0, 1}, {56, 10, 0, 2}, {77, 16, 0, 4}, {100, 22, 0, 6},
    };
    return catalog;
}

void validate(const NeumaierParams& p)
{
    auto fail = [&](const char* what) {
        throw std::invalid_argument("invalid parameters " + to_string(p) + ": " + what);
    };
    const auto [v, k, l, m, s] = p;
    if (!(0 < k && k < v - 1))
        fail("need 0 < k < v-1");
    if (!(0 <= l && l < k))
        fail("need 0 <= lambda < k");
    if (!(2 <= s && s <= l + 2))
        fail("need 2 <= s <= lambda+2");
    if (m < 1)
        fail("need m >= 1");
    if ((v * k) % 2 != 0 || (k * l) % 2 != 0 || (v * k * l) % 6 != 0)
        fail("divisibility conditions fail");
    if ((v - s) * m != (k - s + 1) * s)
        fail("(v-s)m != (k-s+1)s");
    if ((k - s + 1) * (m - 1) != (l - s + 2) * (s - 1))
        fail("(k-s+1)(m-1) != (lambda-s+2)(s-1)");
}

std::int64_t ksm_slack(const NeumaierParams& p) { return p.k - p.lambda - p.s + p.m - 1; }

std::optional<ExtremalRule> classify_extremal(const NeumaierParams& p)
{
    validate(p);
    const auto excess = p.v - 2 * p.k + p.lambda;
    const auto slack = ksm_slack(p);

    if (excess == 0)
        return ExtremalRule{Rule::Erg1, std::nullopt};
    SrgParams witness{p.v, p.v - p.k - 1, 0, excess};
    const auto& catalog = triangle_free_srg_catalog();
    if (std::find(catalog.begin(), catalog.end(), witness) != catalog.end())
        return ExtremalRule{Rule::Erg3, witness};
    if (slack < 0)
        return ExtremalRule{Rule::Ksm, std::nullopt};
    if (excess == 1)
        return ExtremalRule{Rule::Erg2, std::nullopt};
    if (p.s < 4)
        return ExtremalRule{Rule::Lam, std::nullopt};
    if (slack == 0)
        return ExtremalRule{Rule::Ksm, std::nullopt};
    return std::nullopt;
}

std::vector<std::pair<std::int64_t, std::int64_t>> cap_zero_pairs(const ErgParams& tau)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t s = 2; s <= tau.lambda + 2; ++s)
        for (std::int64_t m = 1; m <= s; ++m)
            if (cap_poly(tau, m - 1, s) == 0 && cap_poly(tau, m, s) == 0)
                out.emplace_back(m, s);
    return out;
}

std::vector<FeasibilityRecord> enumerate_feasible(std::int64_t max_v)
{
    if (max_v < 4)
        throw std::invalid_argument("max_v must be at least 4");
    std::vector<FeasibilityRecord> out;
    for (std::int64_t v = 4; v <= max_v; ++v)
        for (std::int64_t k = 1; k < v - 1; ++k)
            for (std::int64_t l = 0; l < k; ++l) {
                ErgParams tau{v, k, l};
                if (!satisfies_vklam(tau))
                    continue;
                auto s = solve_s(tau);
                if (!s || *s > l + 2)
                    continue;
                auto m = solve_m(v, *s, l);
                if (!m)
                    continue;
                if (cap_poly(tau, *m - 1, *s) != 0 || cap_poly(tau, *m, *s) != 0)
                    continue;

                FeasibilityRecord r;
                r.params = {v, k, l, *m, *s};
                r.rule = classify_extremal(r.params);
                if (!r.rule)
                    r.verdict = Verdict::Open;
                else if (r.rule->rule == Rule::Erg1 || r.rule->rule == Rule::Erg2 || r.rule->rule == Rule::Erg3)
                    r.verdict = Verdict::ErgEmptyOrExtremal;
                else if (r.rule->rule == Rule::Ksm && ksm_slack(r.params) < 0)
                    r.verdict = Verdict::NgEmpty;
                else
                    r.verdict = Verdict::NgExtremal;
                out.push_back(r);
            }
    return out;
}

SrgParams ksm_equality_params(std::int64_t m, std::int64_t s)
{
    if (m < 1 || s < 2)
        throw std::invalid_argument("need m >= 1 and s >= 2");
    if (m == s)
        throw std::domain_error("m = s: the graph is complete");
    if (m > s || (s * (s - 1)) % m != 0)
        throw std::invalid_argument("need m < s and m | s(s-1)");
    return {s + s * (s - 1) / m, 2 * (s - 1), s + m - 3, 2 * m};
}

SrgParams genregvtx_params(std::int64_t l, std::int64_t m, std::int64_t s)
{
    if (l < 1 || m < 1 || s < 2)
        throw std::invalid_argument("need l >= 1, m >= 1 and s >= 2");
    const auto num = (l - 1) * (s - 1) * s;
    if (num % m != 0)
        throw std::invalid_argument("m must divide (l-1)(s-1)s");
    return {s + num / m, l * (s - 1), (m - 1) * (l - 1) + s - 2, l * m};
}

std::string result_label(const FeasibilityRecord& r)
{
    if (!r.rule)
        return "-";
    switch (r.rule->rule) {
    case Rule::Erg1: return "erg(1)";
    case Rule::Erg2: return "erg(2)";
    case Rule::Erg3: return "erg(3)";
    case Rule::Lam: return "lam";
    case Rule::Ksm: return "ksm";
    }
    return "?";
}

std::string format_table(const std::vector<FeasibilityRecord>& records)
{
    std::ostringstream os;
    auto row = [&](auto v, auto k, auto l, auto m, auto s, const std::string& res) {
        os << std::setw(4) << v << std::setw(4) << k << std::setw(4) << l << std::setw(4) << m << std::setw(4) << s
           << "  " << res << '\n';
    };
    row("v", "k", "l", "m", "s", "result");
    for (const auto& r : records) {
        auto label = result_label(r);
        if (r.rule && r.rule->witness) {
            const auto& w = *r.rule->witness;
            label += " srg(" + std::to_string(w.v) + "," + std::to_string(w.k) + "," + std::to_string(w.lambda) + "," +
                     std::to_string(w.mu) + ")";
        }
        const auto& p = r.params;
        row(p.v, p.k, p.lambda, p.m, p.s, label);
    }
    return os.str();
}

std::string to_json_line(const FeasibilityRecord& r)
{
    const auto& p = r.params;
    nlohmann::ordered_json j;
    j["v"] = p.v;
    j["k"] = p.k;
    j["lambda"] = p.lambda;
    j["m"] = p.m;
    j["s"] = p.s;
    j["verdict"] = to_string(r.verdict);
    j["rule"] = r.rule ? nlohmann::ordered_json(to_string(r.rule->rule)) : nlohmann::ordered_json(nullptr);
    if (r.rule && r.rule->witness) {
        const auto& w = *r.rule->witness;
        j["witness"] = {w.v, w.k, w.lambda, w.mu};
    } else
        j["witness"] = nullptr;
    j["ksm_slack"] = ksm_slack(p);
    return j.dump();
}

} // namespace neumaier
