#include "shimin/weyl.hpp"

#include "shimin/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>

namespace shimin {

namespace {

int sign_of(int x)
{
    return (x > 0) - (x < 0);
}

} // namespace

SignedPermutation::SignedPermutation(RootSystemKind kind, std::vector<int> images)
    : kind_(kind), images_(std::move(images))
{
    kind_.validate();
    const int degree = kind_.ambient_dim();
    if (static_cast<int>(images_.size()) != degree)
        throw DomainError("expected " + std::to_string(degree) + " images for " + kind_.to_string());
    std::vector<bool> seen(static_cast<std::size_t>(degree) + 1, false);
    int negatives = 0;
    for (int v : images_) {
        const int a = std::abs(v);
        if (a < 1 || a > degree || seen[static_cast<std::size_t>(a)])
            throw DomainError("images do not form a signed permutation of 1.." + std::to_string(degree));
        seen[static_cast<std::size_t>(a)] = true;
        if (v < 0) ++negatives;
    }
    if (kind_.family == Family::A && negatives > 0)
        throw DomainError("type A elements are plain permutations");
    if (kind_.family == Family::D && negatives % 2 != 0)
        throw DomainError("type D elements need an even number of sign changes");
}

SignedPermutation SignedPermutation::identity(RootSystemKind kind)
{
    std::vector<int> images(static_cast<std::size_t>(kind.ambient_dim()));
    std::iota(images.begin(), images.end(), 1);
    return SignedPermutation(kind, std::move(images));
}

int SignedPermutation::operator()(int i) const
{
    if (i == 0) return 0;
    const int a = std::abs(i);
    if (a > degree()) throw DomainError("point " + std::to_string(i) + " outside the permuted range");
    return sign_of(i) * images_[static_cast<std::size_t>(a - 1)];
}

int SignedPermutation::preimage(int v) const
{
    if (v == 0) return 0;
    for (int i = 1; i <= degree(); ++i) {
        const int img = images_[static_cast<std::size_t>(i - 1)];
        if (img == v) return i;
        if (img == -v) return -i;
    }
    throw DomainError("value " + std::to_string(v) + " outside the permuted range");
}

SignedPermutation SignedPermutation::inverse() const
{
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= degree(); ++i) {
        const int img = images_[static_cast<std::size_t>(i - 1)];
        inv[static_cast<std::size_t>(std::abs(img) - 1)] = sign_of(img) * i;
    }
    return SignedPermutation(kind_, std::move(inv));
}

bool SignedPermutation::is_identity() const
{
    for (int i = 1; i <= degree(); ++i)
        if (images_[static_cast<std::size_t>(i - 1)] != i) return false;
    return true;
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b)
{
    if (!(a.kind_ == b.kind_)) throw DomainError("composing elements of different groups");
    std::vector<int> images(b.images_.size());
    for (int i = 1; i <= b.degree(); ++i) images[static_cast<std::size_t>(i - 1)] = a(b(i));
    return SignedPermutation(a.kind_, std::move(images));
}

std::string SignedPermutation::window() const
{
    std::ostringstream out;
    const int n = degree();
    if (kind_.family == Family::A) {
        for (int i = 1; i <= n; ++i) out << (i > 1 ? " " : "") << (*this)(i);
        return out.str();
    }
    const bool fork = kind_.family == Family::D;
    const int head = fork ? n - 1 : n;
    for (int i = 1; i <= head; ++i) out << (*this)(i) << ' ';
    if (fork) out << '{' << (*this)(n) << '/' << (*this)(-n) << '}';
    else out << "| 0 |";
    for (int i = head; i >= 1; --i) out << ' ' << (*this)(-i);
    return out.str();
}

Root act(const SignedPermutation& w, const Root& r)
{
    if (static_cast<int>(r.dim()) != w.degree())
        throw DomainError("root of dimension " + std::to_string(r.dim()) + " acted on by " +
                          w.kind().to_string());
    std::vector<int> out(r.dim(), 0);
    for (int i = 1; i <= w.degree(); ++i) {
        const int c = r[static_cast<std::size_t>(i - 1)];
        if (c == 0) continue;
        const int img = w(i);
        out[static_cast<std::size_t>(std::abs(img) - 1)] += sign_of(img) * c;
    }
    return Root(std::move(out));
}

SignedPermutation inverse(const SignedPermutation& w)
{
    return w.inverse();
}

bool is_positive(const RootSystem& rs, const Root& r)
{
    if (rs.is_positive_root(r)) return true;
    if (rs.is_positive_root(-r)) return false;
    throw DomainError(r.to_string() + " is not a root of " + rs.kind().to_string());
}

SignedPermutation reflection(const RootSystem& rs, const Root& alpha)
{
    if (!rs.is_root(alpha)) throw DomainError(alpha.to_string() + " is not a root");
    const int norm = dot(alpha, alpha);
    const int dim = rs.ambient_dim();
    std::vector<int> images(static_cast<std::size_t>(dim));
    for (int i = 1; i <= dim; ++i) {
        const Root e = Root::unit(dim, i);
        // s(e) = e - <e, alpha^vee> alpha with alpha^vee = 2 alpha / <alpha, alpha>
        const int pairing = 2 * dot(e, alpha) / norm;
        std::vector<int> c(e.coords().begin(), e.coords().end());
        for (int k = 0; k < dim; ++k) c[static_cast<std::size_t>(k)] -= pairing * alpha[static_cast<std::size_t>(k)];
        int target = 0;
        for (int k = 0; k < dim; ++k) {
            const int v = c[static_cast<std::size_t>(k)];
            if (v == 0) continue;
            if (target != 0 || std::abs(v) != 1) throw Error("internal: reflection is not monomial");
            target = v * (k + 1);
        }
        images[static_cast<std::size_t>(i - 1)] = target;
    }
    return SignedPermutation(rs.kind(), std::move(images));
}

std::vector<Root> negative_set(const RootSystem& rs, const SignedPermutation& w)
{
    const SignedPermutation winv = w.inverse();
    std::vector<Root> out;
    for (const Root& r : rs.positive_roots()) {
        if (!rs.is_positive_root(act(winv, r))) out.push_back(r);
    }
    return out;
}

SignedPermutation from_negative_set(const RootSystem& rs, std::span<const Root> negatives)
{
    std::vector<bool> in_set(rs.size(), false);
    std::size_t remaining = 0;
    for (const Root& r : negatives) {
        const auto idx = rs.index_of(r);
        if (!idx) throw InadmissibleError(r.to_string() + " is not a positive root");
        if (!in_set[*idx]) ++remaining;
        in_set[*idx] = true;
    }
    const std::vector<bool> target = in_set;

    std::vector<SignedPermutation> factors;
    while (remaining > 0) {
        std::optional<std::size_t> simple;
        for (std::size_t s = 0; s < rs.simple_roots().size(); ++s) {
            if (in_set[rs.require_index(rs.simple_roots()[s])]) {
                simple = s;
                break;
            }
        }
        if (!simple) throw InadmissibleError("negative set contains no simple root");
        const Root& alpha = rs.simple_roots()[*simple];
        const SignedPermutation s = reflection(rs, alpha);
        std::vector<bool> next(rs.size(), false);
        for (std::size_t i = 0; i < rs.size(); ++i) {
            if (!in_set[i] || rs.root(i) == alpha) continue;
            const auto img = rs.index_of(act(s, rs.root(i)));
            if (!img) throw InadmissibleError("negative set is not an inversion set");
            next[*img] = true;
        }
        in_set = std::move(next);
        --remaining;
        factors.push_back(s);
    }

    SignedPermutation w = SignedPermutation::identity(rs.kind());
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) w = *it * w;

    std::vector<bool> check(rs.size(), false);
    for (const Root& r : negative_set(rs, w)) check[rs.require_index(r)] = true;
    if (check != target) throw InadmissibleError("negative set is not an inversion set");
    return w;
}

std::vector<int> encode_inversion_vector(const SignedPermutation& pi)
{
    if (pi.kind().family != Family::A) throw DomainError("inversion vectors are defined for type A");
    const int m = pi.degree();
    std::vector<int> out(static_cast<std::size_t>(m), 0);
    for (int v = 1; v <= m; ++v) {
        for (int p = pi.preimage(v) + 1; p <= m; ++p)
            if (pi(p) < v) ++out[static_cast<std::size_t>(v - 1)];
    }
    return out;
}

SignedPermutation decode_inversion_vector(std::span<const int> inversions)
{
    const int m = static_cast<int>(inversions.size());
    if (m < 2) throw DomainError("inversion vector needs at least two entries");
    std::vector<int> line; // values in position order
    for (int v = 1; v <= m; ++v) {
        const int k = inversions[static_cast<std::size_t>(v - 1)];
        if (k < 0 || k >= v)
            throw DomainError("inversion vector entry " + std::to_string(k) + " infeasible for value " +
                              std::to_string(v));
        // every placed value is smaller; k of them must end up right of v
        line.insert(line.end() - k, v);
    }
    return SignedPermutation(RootSystemKind{Family::A, m - 1}, std::move(line));
}

std::vector<SignedPermutation> weyl_group_elements(RootSystemKind kind)
{
    kind.validate();
    const int degree = kind.ambient_dim();
    std::vector<int> perm(static_cast<std::size_t>(degree));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<SignedPermutation> out;
    do {
        if (kind.family == Family::A) {
            out.emplace_back(kind, perm);
            continue;
        }
        for (unsigned mask = 0; mask < (1u << degree); ++mask) {
            if (kind.family == Family::D && std::popcount(mask) % 2 != 0) continue;
            std::vector<int> images(perm);
            for (int i = 0; i < degree; ++i)
                if (mask >> i & 1u) images[static_cast<std::size_t>(i)] = -images[static_cast<std::size_t>(i)];
            out.emplace_back(kind, std::move(images));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace shimin
