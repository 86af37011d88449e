#include "shimin/oracle.hpp"

#include "shimin/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <unordered_set>

namespace shimin {

using linalg::Rational;

Rational pairing(const RationalPoint& p, const Root& alpha)
{
    if (p.size() != alpha.dim()) throw DomainError("point and root of different dimensions");
    Rational s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (alpha[i] != 0) s += p[i] * alpha[i];
    }
    return s;
}

Alcove fundamental_alcove(const RootSystem& rs)
{
    const auto dim = static_cast<std::size_t>(rs.ambient_dim());
    const int c = rs.height(rs.highest_root_index());
    const Rational target(1, c + 2);

    linalg::RationalMatrix a;
    linalg::RationalVector b;
    for (const Root& s : rs.simple_roots()) {
        a.emplace_back(s.coords().begin(), s.coords().end());
        b.push_back(target);
    }
    if (rs.family() == Family::A) {
        a.emplace_back(dim, Rational(1));
        b.push_back(0);
    }
    auto sol = linalg::solve(std::move(a), std::move(b));
    if (!sol) throw Error("internal: fundamental alcove system is singular");

    Alcove out;
    out.point = std::move(*sol);
    out.kvec = k_vector(rs, out.point);
    out.depth = 0;
    return out;
}

RationalPoint reflect(const RationalPoint& p, const Root& alpha, long long k)
{
    const Rational offset = pairing(p, alpha) - static_cast<long>(k);
    if (offset == 0) throw DomainError("point lies on the reflecting hyperplane");
    const Rational scale = 2 * offset / dot(alpha, alpha);
    RationalPoint out(p);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (alpha[i] != 0) out[i] -= scale * alpha[i];
    }
    return out;
}

ShiVector k_vector(const RootSystem& rs, const RationalPoint& p)
{
    ShiVector out;
    out.entries.reserve(rs.size());
    for (const Root& alpha : rs.positive_roots()) {
        const Rational q = pairing(p, alpha);
        if (q.get_den() == 1) throw DegeneratePointError("integer pairing with " + alpha.to_string());
        const mpz_class f = linalg::floor(q);
        if (!f.fits_slong_p()) throw ResourceError("K-vector entry exceeds machine range", 0);
        out.entries.push_back(f.get_si());
    }
    return out;
}

// ---------------------------------------------------------------------------
// BFS

namespace {

struct KvecHash {
    std::size_t operator()(const std::vector<long long>& v) const noexcept
    {
        std::size_t h = v.size();
        for (long long x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x9e3779b9);
        return h;
    }
};

/*
 * Every pairing of a point in the orbit of the fundamental point lies in
 * (1/den) Z with den = c + 2: it starts as height/den and reflections add
 * integer multiples of (pairing - k). The BFS therefore carries integer
 * numerators, and reconstructs exact coordinates only for accepted alcoves.
 */
struct Frame {
    std::vector<mpz_class> numerators; // <p, alpha> * den, canonical root order
};

struct Candidate {
    std::size_t parent;  // index into the frontier
    std::size_t root;    // reflecting root
    long long level;     // hyperplane level
    std::vector<long long> kvec;
};

class Expander {
public:
    explicit Expander(const RootSystem& rs) : rs_(rs), den_(rs.height(rs.highest_root_index()) + 2)
    {
        const std::size_t n = rs.size();
        cartan_.assign(n, std::vector<long>(n, 0));
        for (std::size_t a = 0; a < n; ++a) {
            const Root& alpha = rs.root(a);
            const int norm = dot(alpha, alpha);
            for (std::size_t b = 0; b < n; ++b) cartan_[a][b] = 2 * dot(alpha, rs.root(b)) / norm;
        }
    }

    long den() const { return den_; }

    std::vector<long long> floor_kvec(const std::vector<mpz_class>& nums) const
    {
        std::vector<long long> k(nums.size());
        mpz_class q;
        for (std::size_t i = 0; i < nums.size(); ++i) {
            mpz_fdiv_q_ui(q.get_mpz_t(), nums[i].get_mpz_t(), static_cast<unsigned long>(den_));
            if (!q.fits_slong_p()) throw ResourceError("K-vector entry exceeds machine range", 0);
            k[i] = q.get_si();
        }
        return k;
    }

    /// Numerators of the reflection of `base` in H_{alpha_a, level}.
    void reflect_numerators(const std::vector<mpz_class>& base, std::size_t a, long long level,
                            std::vector<mpz_class>& out) const
    {
        const mpz_class offset = base[a] - mpz_class(static_cast<long>(level)) * den_;
        out.resize(base.size());
        for (std::size_t b = 0; b < base.size(); ++b) {
            out[b] = base[b];
            if (cartan_[a][b] != 0) out[b] -= offset * cartan_[a][b];
        }
    }

    /*
     * First occurrences of the candidates of frontier[begin, end) that are not
     * in `seen`, in generation order, stopping after `budget` of them.
     */
    std::vector<Candidate> expand(const std::vector<Frame>& frontier, const std::vector<const ShiVector*>& kvecs,
                                  std::size_t begin, std::size_t end,
                                  const std::unordered_set<std::vector<long long>, KvecHash>& seen,
                                  std::size_t budget) const
    {
        std::vector<Candidate> out;
        std::unordered_set<std::vector<long long>, KvecHash> local;
        std::vector<mpz_class> nums;
        for (std::size_t f = begin; f < end; ++f) {
            for (std::size_t a = 0; a < rs_.size(); ++a) {
                const long long k = kvecs[f]->entries[a];
                for (long long level : {k, k + 1}) {
                    reflect_numerators(frontier[f].numerators, a, level, nums);
                    auto kv = floor_kvec(nums);
                    if (seen.contains(kv) || !local.insert(kv).second) continue;
                    out.push_back(Candidate{f, a, level, std::move(kv)});
                    if (out.size() >= budget) return out;
                }
            }
        }
        return out;
    }

private:
    const RootSystem& rs_;
    long den_;
    std::vector<std::vector<long>> cartan_; // <alpha^vee, beta>
};

bool layer_saturated(const std::map<SignType, Region>& regions)
{
    return std::all_of(regions.begin(), regions.end(),
                       [](const auto& kv) { return find_dominating(kv.second).has_value(); });
}

} // namespace

AlcoveEnumeration enumerate_alcoves(const RootSystem& rs, EnumerationMode mode, EnumerationLimits limits)
{
    const Expander expander(rs);
    unsigned threads = limits.threads ? limits.threads : std::max(1u, std::thread::hardware_concurrency());

    AlcoveEnumeration result;
    std::unordered_set<std::vector<long long>, KvecHash> seen;

    Alcove origin = fundamental_alcove(rs);
    std::vector<Frame> frontier(1);
    for (std::size_t b = 0; b < rs.size(); ++b) frontier[0].numerators.emplace_back(rs.height(b));
    seen.insert(origin.kvec.entries);
    result.alcoves.push_back(std::move(origin));

    std::size_t frontier_begin = 0;
    std::size_t regions_seen = 1;
    int quiet = 0;

    auto limit_hit = [&](const std::string& what) {
        if (!limits.allow_partial) throw ResourceError(what, result.alcoves.size());
        result.truncated = true;
    };

    for (int depth = 1;; ++depth) {
        if (const auto* r = std::get_if<Radius>(&mode); r && depth > r->depth) break;
        if (const auto* u = std::get_if<UntilRegions>(&mode)) {
            const auto regions = regions_by_sign(result.alcoves);
            if (regions.size() > regions_seen) quiet = 0;
            else if (depth > 1) ++quiet;
            regions_seen = regions.size();
            if (quiet >= u->quiet_layers && regions.size() >= u->target && layer_saturated(regions)) break;
        }
        if (depth > limits.max_depth) {
            limit_hit("alcove enumeration exceeded max depth " + std::to_string(limits.max_depth));
            break;
        }

        std::vector<const ShiVector*> kvecs;
        for (std::size_t i = frontier_begin; i < result.alcoves.size(); ++i) kvecs.push_back(&result.alcoves[i].kvec);

        // parallel candidate generation over contiguous chunks, merged in order
        const std::size_t count = frontier.size();
        const std::size_t workers = std::min<std::size_t>(threads, std::max<std::size_t>(1, count / 64));
        // one more than the room left, so that reaching the limit is detected
        const std::size_t budget = limits.max_alcoves - std::min(limits.max_alcoves, result.alcoves.size()) + 1;
        std::vector<std::vector<Candidate>> chunks(workers);
        if (workers == 1) {
            chunks[0] = expander.expand(frontier, kvecs, 0, count, seen, budget);
        } else {
            std::vector<std::thread> pool;
            for (std::size_t w = 0; w < workers; ++w) {
                const std::size_t lo = count * w / workers;
                const std::size_t hi = count * (w + 1) / workers;
                pool.emplace_back([&, w, lo, hi] { chunks[w] = expander.expand(frontier, kvecs, lo, hi, seen, budget); });
            }
            for (auto& t : pool) t.join();
        }

        std::vector<Frame> next;
        const std::size_t layer_begin = result.alcoves.size();
        bool stop = false;
        for (auto& chunk : chunks) {
            for (auto& cand : chunk) {
                if (!seen.insert(cand.kvec).second) continue;
                if (result.alcoves.size() >= limits.max_alcoves) {
                    stop = true;
                    break;
                }
                const Alcove& parent = result.alcoves[frontier_begin + cand.parent];
                Alcove child;
                child.point = reflect(parent.point, rs.root(cand.root), cand.level);
                child.kvec.entries = std::move(cand.kvec);
                child.depth = depth;
                result.alcoves.push_back(std::move(child));
                next.emplace_back();
                expander.reflect_numerators(frontier[cand.parent].numerators, cand.root, cand.level, next.back().numerators);
            }
            if (stop) break;
        }
        if (stop) {
            limit_hit("alcove enumeration exceeded " + std::to_string(limits.max_alcoves) + " alcoves");
            result.depth = depth - 1;
            return result;
        }
        frontier = std::move(next);
        frontier_begin = layer_begin;
        result.depth = depth;
        if (frontier.empty()) break;
    }
    return result;
}

std::map<SignType, Region> regions_by_sign(std::span<const Alcove> alcoves)
{
    std::map<SignType, Region> out;
    for (const Alcove& a : alcoves) out[sign_of(a.kvec)].push_back(&a);
    return out;
}

std::optional<ShiVector> find_dominating(std::span<const Alcove* const> group)
{
    if (group.empty()) return std::nullopt;
    const std::size_t n = group.front()->kvec.size();
    std::vector<long long> floor_abs(n, -1);
    for (const Alcove* a : group) {
        for (std::size_t i = 0; i < n; ++i) {
            const long long v = std::llabs(a->kvec.entries[i]);
            if (floor_abs[i] < 0 || v < floor_abs[i]) floor_abs[i] = v;
        }
    }
    for (const Alcove* a : group) {
        bool all = true;
        for (std::size_t i = 0; i < n && all; ++i) all = std::llabs(a->kvec.entries[i]) == floor_abs[i];
        if (all) return a->kvec;
    }
    return std::nullopt;
}

ShiVector oracle_minimal(std::span<const Alcove* const> group)
{
    if (auto m = find_dominating(group)) return *m;
    throw SaturationError("no member of the region dominates all others; enlarge the enumeration");
}

} // namespace shimin
