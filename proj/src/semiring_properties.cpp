#include "semidp/semiring_properties.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <random>
#include <set>

#include "semidp/errors.hpp"

namespace semidp {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::NotFalsified: return "not-falsified";
    }
    return "?";
}

std::string_view to_string(Soundness s) {
    switch (s) {
        case Soundness::Guaranteed: return "guaranteed";
        case Soundness::NotFalsified: return "not-falsified";
        case Soundness::NotGuaranteed: return "not-guaranteed";
        case Soundness::Inconclusive: return "inconclusive";
    }
    return "?";
}

Verdict PropertyReport::verdict() const {
    Verdict v = Verdict::Holds;
    for (const auto& r : results) {
        if (r.verdict == Verdict::Fails) return Verdict::Fails;
        if (r.verdict == Verdict::NotFalsified) v = Verdict::NotFalsified;
    }
    return v;
}

const PropertyResult* PropertyReport::find(std::string_view property) const {
    for (const auto& r : results)
        if (r.property == property) return &r;
    return nullptr;
}

const PropertyResult* PropertyReport::first_failure() const {
    for (const auto& r : results)
        if (r.verdict == Verdict::Fails) return &r;
    return nullptr;
}

void PropertyReport::merge(const PropertyReport& other) {
    results.insert(results.end(), other.results.begin(), other.results.end());
    budget = std::max(budget, other.budget);
    evaluations += other.evaluations;
    exhaustive = results.size() == other.results.size() ? other.exhaustive : exhaustive && other.exhaustive;
}

namespace {

template <std::size_t N>
using Pick = std::array<Value, N>;

// Pool in descending carrier order (element index for finite carriers, numeric otherwise).
std::vector<Value> descending(const Semiring&, std::vector<Value> pool) {
    std::sort(pool.begin(), pool.end(), std::greater<>());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    return pool;
}

struct Searcher {
    const Semiring& s;
    const CheckOptions& opt;
    std::uint64_t evaluations = 0;

    // Exhaustive scan over pool^N, last position fastest, returning the first violation.
    template <std::size_t N, class F>
    std::optional<Pick<N>> scan(const std::vector<Value>& pool, F&& violates) {
        if (pool.empty()) return std::nullopt;
        std::array<std::size_t, N> idx{};
        for (;;) {
            Pick<N> p;
            for (std::size_t k = 0; k < N; ++k) p[k] = pool[idx[k]];
            ++evaluations;
            if (violates(p)) return p;
            std::size_t k = N;
            while (k > 0) {
                --k;
                if (++idx[k] < pool.size()) break;
                idx[k] = 0;
                if (k == 0) return std::nullopt;
            }
        }
    }

    template <std::size_t N, class F>
    std::optional<Pick<N>> random(F&& violates) {
        std::mt19937_64 rng(opt.seed);
        for (std::uint64_t i = 0; i < opt.budget; ++i) {
            Pick<N> p;
            for (auto& v : p) v = s.sample(rng);
            ++evaluations;
            if (violates(p)) return p;
        }
        return std::nullopt;
    }

    // Finite: exhaustive. Infinite: anchors exhaustively, then random samples.
    template <std::size_t N, class F>
    std::optional<Pick<N>> search(F&& violates) {
        if (s.finite()) {
            std::vector<Value> all(s.elements().begin(), s.elements().end());
            return scan<N>(descending(s, all), violates);
        }
        if (auto w = scan<N>(descending(s, s.anchors()), violates)) return w;
        return random<N>(violates);
    }
};

template <std::size_t N>
PropertyResult make_result(const Semiring& s, std::string name, const std::optional<Pick<N>>& w,
                           std::vector<std::string> names) {
    PropertyResult r;
    r.property = std::move(name);
    if (w) {
        r.verdict = Verdict::Fails;
        r.witness.assign(w->begin(), w->end());
        r.witness_names = std::move(names);
    } else {
        r.verdict = s.finite() ? Verdict::Holds : Verdict::NotFalsified;
    }
    return r;
}

template <std::size_t N, class F>
PropertyReport single(const Semiring& s, const CheckOptions& opt, std::string name,
                      std::vector<std::string> names, F&& violates) {
    Searcher se{s, opt};
    auto w = se.template search<N>(violates);
    PropertyReport rep;
    rep.results.push_back(make_result<N>(s, std::move(name), w, std::move(names)));
    rep.budget = opt.budget;
    rep.evaluations = se.evaluations;
    rep.exhaustive = s.finite();
    return rep;
}

// Orders a symmetric (a, b, ...) witness so the smaller element comes first.
template <std::size_t N>
std::optional<Pick<N>> canonical_pair(const Semiring& s, std::optional<Pick<N>> w) {
    if (w && s.leq((*w)[1], (*w)[0]) && (*w)[0] != (*w)[1]) std::swap((*w)[0], (*w)[1]);
    return w;
}

bool lt(const Semiring& s, Value a, Value b) { return a != b && s.leq(a, b); }

// Im(.) exhaustively for finite carriers, closure of sampled products otherwise.
std::vector<Value> image(const Semiring& s, const CheckOptions& opt, bool& approximated) {
    std::vector<Value> pool;
    approximated = !s.finite();
    if (s.finite()) {
        pool.assign(s.elements().begin(), s.elements().end());
    } else {
        pool = s.anchors();
        std::mt19937_64 rng(opt.seed);
        const std::uint64_t extra = std::min<std::uint64_t>(opt.budget, 64);
        for (std::uint64_t i = 0; i < extra; ++i) pool.push_back(s.sample(rng));
    }
    std::set<Value> img;
    for (Value a : pool)
        for (Value b : pool) img.insert(s.mul(a, b));
    return descending(s, {img.begin(), img.end()});
}

}  // namespace

PropertyReport check_semiring_axioms(const Semiring& s, const CheckOptions& opt) {
    PropertyReport rep;
    rep.budget = opt.budget;
    rep.exhaustive = s.finite();
    auto run3 = [&](std::string name, auto violates) {
        Searcher se{s, opt};
        auto w = se.template search<3>(violates);
        rep.evaluations += se.evaluations;
        rep.results.push_back(make_result<3>(s, std::move(name), w, {"a", "b", "c"}));
    };
    auto run2 = [&](std::string name, auto violates) {
        Searcher se{s, opt};
        auto w = se.template search<2>(violates);
        rep.evaluations += se.evaluations;
        rep.results.push_back(make_result<2>(s, std::move(name), w, {"a", "b"}));
    };
    auto run1 = [&](std::string name, auto violates) {
        Searcher se{s, opt};
        auto w = se.template search<1>(violates);
        rep.evaluations += se.evaluations;
        rep.results.push_back(make_result<1>(s, std::move(name), w, {"a"}));
    };
    const Value z = s.zero(), o = s.one();
    run3("add-associative", [&](const Pick<3>& p) {
        return s.add(s.add(p[0], p[1]), p[2]) != s.add(p[0], s.add(p[1], p[2]));
    });
    run2("add-commutative", [&](const Pick<2>& p) { return s.add(p[0], p[1]) != s.add(p[1], p[0]); });
    run1("add-identity", [&](const Pick<1>& p) { return s.add(p[0], z) != p[0] || s.add(z, p[0]) != p[0]; });
    run3("mul-associative", [&](const Pick<3>& p) {
        return s.mul(s.mul(p[0], p[1]), p[2]) != s.mul(p[0], s.mul(p[1], p[2]));
    });
    run2("mul-commutative", [&](const Pick<2>& p) { return s.mul(p[0], p[1]) != s.mul(p[1], p[0]); });
    run1("mul-identity", [&](const Pick<1>& p) { return s.mul(p[0], o) != p[0] || s.mul(o, p[0]) != p[0]; });
    run3("left-distributive", [&](const Pick<3>& p) {
        return s.mul(p[0], s.add(p[1], p[2])) != s.add(s.mul(p[0], p[1]), s.mul(p[0], p[2]));
    });
    run3("right-distributive", [&](const Pick<3>& p) {
        return s.mul(s.add(p[1], p[2]), p[0]) != s.add(s.mul(p[1], p[0]), s.mul(p[2], p[0]));
    });
    run1("zero-annihilates", [&](const Pick<1>& p) { return s.mul(p[0], z) != z || s.mul(z, p[0]) != z; });
    return rep;
}

PropertyReport check_selective(const Semiring& s, const CheckOptions& opt) {
    return single<2>(s, opt, "selective", {"a", "b"}, [&](const Pick<2>& p) {
        Value r = s.add(p[0], p[1]);
        return r != p[0] && r != p[1];
    });
}

PropertyReport check_idempotent(const Semiring& s, const CheckOptions& opt) {
    return single<1>(s, opt, "idempotent", {"a"}, [&](const Pick<1>& p) { return s.add(p[0], p[0]) != p[0]; });
}

PropertyReport check_totally_ordered(const Semiring& s, const CheckOptions& opt) {
    // a <= b iff a + c = b for some c; the witness c is searched over the carrier
    // (finite) or the anchors plus b itself (infinite).
    std::vector<Value> cands = s.finite() ? std::vector<Value>(s.elements().begin(), s.elements().end())
                                          : s.anchors();
    auto below = [&](Value a, Value b) {
        if (s.add(a, b) == b) return true;
        for (Value c : cands)
            if (s.add(a, c) == b) return true;
        return false;
    };
    auto rep = single<2>(s, opt, "totally-ordered", {"a", "b"},
                         [&](const Pick<2>& p) { return !below(p[0], p[1]) && !below(p[1], p[0]); });
    return rep;
}

PropertyReport check_square_mult_cancellative_on_image(const Semiring& s, const CheckOptions& opt) {
    bool approx = false;
    auto img = image(s, opt, approx);
    Searcher se{s, opt};
    auto w = se.scan<2>(img, [&](const Pick<2>& p) {
        const Value a = p[0], b = p[1];
        return a != s.zero() && a != b && s.mul(a, a) == s.mul(b, a);
    });
    PropertyReport rep;
    auto r = make_result<2>(s, "square-mult-cancellative-on-image", w, {"a", "b"});
    if (approx) r.note = "image approximated by the closure of sampled products";
    rep.results.push_back(r);
    rep.budget = opt.budget;
    rep.evaluations = se.evaluations;
    rep.exhaustive = s.finite();
    return rep;
}

PropertyReport check_square_ordered(const Semiring& s, const CheckOptions& opt) {
    return single<2>(s, opt, "square-ordered", {"a", "b"}, [&](const Pick<2>& p) {
        const Value a = p[0], b = p[1];
        return s.mul(a, a) == s.mul(b, a) && !s.leq(s.mul(a, a), s.mul(b, b));
    });
}

PropertyReport check_weakly_mult_cancellative(const Semiring& s, const CheckOptions& opt) {
    Searcher se{s, opt};
    auto w = canonical_pair<3>(s, se.search<3>([&](const Pick<3>& p) {
        const Value ac = s.mul(p[0], p[2]);
        return p[0] != p[1] && ac != s.zero() && ac == s.mul(p[1], p[2]);
    }));
    PropertyReport rep;
    rep.results.push_back(make_result<3>(s, "weakly-mult-cancellative", w, {"a", "b", "c"}));
    rep.budget = opt.budget;
    rep.evaluations = se.evaluations;
    rep.exhaustive = s.finite();
    return rep;
}

PropertyReport check_strict_monotonic(const Semiring& s, const CheckOptions& opt) {
    return single<3>(s, opt, "strict-monotonic", {"a", "b", "c"}, [&](const Pick<3>& p) {
        const Value a = p[0], b = p[1], c = p[2];
        return c != s.zero() && lt(s, a, b) && !lt(s, s.mul(a, c), s.mul(b, c));
    });
}

PropertyReport check_mult_cancellative(const Semiring& s, const CheckOptions& opt) {
    Searcher se{s, opt};
    auto w = canonical_pair<3>(s, se.search<3>([&](const Pick<3>& p) {
        return p[2] != s.zero() && p[0] != p[1] && s.mul(p[0], p[2]) == s.mul(p[1], p[2]);
    }));
    PropertyReport rep;
    rep.results.push_back(make_result<3>(s, "mult-cancellative", w, {"a", "b", "c"}));
    rep.budget = opt.budget;
    rep.evaluations = se.evaluations;
    rep.exhaustive = s.finite();
    return rep;
}

const SoundnessEntry& SoundnessMatrix::at(std::string_view algorithm, std::string_view task) const {
    for (const auto& e : entries)
        if (e.algorithm == algorithm && e.task == task) return e;
    throw DomainError("no soundness entry for " + std::string(algorithm) + "/" + std::string(task));
}

SoundnessMatrix classify(const Semiring& s, const CheckOptions& opt) {
    if (!s.selective())
        throw RefusedError("classification refused: " + s.name() +
                           " is not selective, the optimization extension system is undefined");
    SoundnessMatrix m;
    m.semiring = s.name();
    auto sel = check_selective(s, opt);
    if (!sel.passed())
        throw RefusedError("classification refused: " + s.name() + " is not selective");
    auto weak = check_weakly_mult_cancellative(s, opt);
    auto sq = check_square_mult_cancellative_on_image(s, opt);
    auto ord = check_square_ordered(s, opt);
    m.properties.merge(sel);
    m.properties.merge(weak);
    m.properties.merge(sq);
    m.properties.merge(ord);

    auto from = [](Verdict v) {
        return v == Verdict::Holds ? Soundness::Guaranteed
               : v == Verdict::NotFalsified ? Soundness::NotFalsified
                                            : Soundness::NotGuaranteed;
    };
    m.entries.push_back({"SETS", "single", Soundness::Guaranteed, "unconditional"});
    m.entries.push_back({"ETS", "partial", Soundness::Guaranteed, "unconditional"});
    m.entries.push_back({"ETS", "complete", from(weak.verdict()), "weakly-mult-cancellative"});
    Soundness egp;
    std::string basis;
    if (sq.verdict() != Verdict::Fails) {
        egp = from(sq.verdict());
        basis = "square-mult-cancellative-on-image";
    } else if (ord.verdict() == Verdict::Fails) {
        egp = Soundness::NotGuaranteed;
        basis = "square-ordered";
    } else {
        egp = Soundness::Inconclusive;
        basis = "square-ordered holds, square-mult-cancellative-on-image fails";
    }
    m.entries.push_back({"EGP", "complete", egp, basis});
    return m;
}

}  // namespace semidp
