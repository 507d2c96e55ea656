#include "semidp/kernels.hpp"

#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace semidp::kernels {

namespace {

// Mixed-radix counter over a scope that tracks linear offsets into other tables.
struct Odometer {
    const Scope& scope;
    std::vector<std::uint32_t> digit;
    std::vector<std::vector<Index>> strides;
    std::vector<Index> offset;

    Odometer(const Scope& sc, std::vector<std::vector<Index>> st)
        : scope(sc), digit(sc.size(), 0), strides(std::move(st)), offset(strides.size(), 0) {}

    void seek(Index i) {
        for (auto& o : offset) o = 0;
        for (std::size_t k = scope.size(); k-- > 0;) {
            digit[k] = static_cast<std::uint32_t>(i % scope[k].card);
            i /= scope[k].card;
            for (std::size_t t = 0; t < strides.size(); ++t) offset[t] += digit[k] * strides[t][k];
        }
    }

    void next() {
        for (std::size_t k = scope.size(); k-- > 0;) {
            if (++digit[k] < scope[k].card) {
                for (std::size_t t = 0; t < strides.size(); ++t) offset[t] += strides[t][k];
                return;
            }
            for (std::size_t t = 0; t < strides.size(); ++t)
                offset[t] -= static_cast<Index>(scope[k].card - 1) * strides[t][k];
            digit[k] = 0;
        }
    }
};

class ErrorSlot {
public:
    void capture() {
        std::lock_guard lock(m_);
        if (!e_) e_ = std::current_exception();
    }
    void rethrow() {
        if (e_) std::rethrow_exception(e_);
    }

private:
    std::mutex m_;
    std::exception_ptr e_;
};

}  // namespace

bool use_parallel(Exec e, Index size) {
    if (e == Exec::Serial) return false;
    if (e == Exec::Parallel) return true;
    return size >= kParallelThreshold;
}

std::vector<Value> combine_serial(const Semiring& s, const Scope& sa, std::span<const Value> a,
                                  const Scope& sb, std::span<const Value> b, const Scope& target) {
    const Index n = target.cardinality();
    std::vector<Value> out(n);
    Odometer od(target, {strides_within(sa, target), strides_within(sb, target)});
    for (Index i = 0; i < n; ++i) {
        out[i] = s.mul(a[od.offset[0]], b[od.offset[1]]);
        od.next();
    }
    return out;
}

std::vector<Value> combine_parallel(const Semiring& s, const Scope& sa, std::span<const Value> a,
                                    const Scope& sb, std::span<const Value> b, const Scope& target) {
    const Index n = target.cardinality();
    std::vector<Value> out(n);
    const auto st_a = strides_within(sa, target);
    const auto st_b = strides_within(sb, target);
    ErrorSlot err;
#pragma omp parallel
    {
        Index begin = 0, end = n;
#ifdef _OPENMP
        const Index nt = static_cast<Index>(omp_get_num_threads());
        const Index t = static_cast<Index>(omp_get_thread_num());
        begin = n * t / nt;
        end = n * (t + 1) / nt;
#endif
        try {
            if (begin < end) {
                Odometer od(target, {st_a, st_b});
                od.seek(begin);
                for (Index i = begin; i < end; ++i) {
                    out[i] = s.mul(a[od.offset[0]], b[od.offset[1]]);
                    od.next();
                }
            }
        } catch (...) {
            err.capture();
        }
    }
    err.rethrow();
    return out;
}

std::vector<Value> project_serial(const Semiring& s, const Scope& src, std::span<const Value> t,
                                  const Scope& target) {
    std::vector<Value> out(target.cardinality(), s.zero());
    Odometer od(src, {strides_within(target, src)});
    for (Index i = 0; i < t.size(); ++i) {
        Value& cell = out[od.offset[0]];
        cell = s.add(cell, t[i]);
        od.next();
    }
    return out;
}

std::vector<Value> project_parallel(const Semiring& s, const Scope& src, std::span<const Value> t,
                                    const Scope& target) {
    const Index n = target.cardinality();
    std::vector<Value> out(n, s.zero());
    const Scope elim = minus(src, target);
    const Index m = elim.cardinality();
    const auto src_strides = strides_within(src, src);
    // Strides of target and eliminated variables inside the source table.
    std::vector<Index> keep_in_src(target.size()), elim_in_src(elim.size());
    for (std::size_t k = 0; k < target.size(); ++k) keep_in_src[k] = src_strides[*src.position(target[k].id)];
    for (std::size_t k = 0; k < elim.size(); ++k) elim_in_src[k] = src_strides[*src.position(elim[k].id)];
    ErrorSlot err;
#pragma omp parallel for schedule(static)
    for (std::int64_t oi = 0; oi < static_cast<std::int64_t>(n); ++oi) {
        try {
            Odometer keep(target, {keep_in_src});
            keep.seek(static_cast<Index>(oi));
            Odometer rest(elim, {elim_in_src});
            Value acc = s.zero();
            for (Index j = 0; j < m; ++j) {
                acc = s.add(acc, t[keep.offset[0] + rest.offset[0]]);
                rest.next();
            }
            out[static_cast<Index>(oi)] = acc;
        } catch (...) {
            err.capture();
        }
    }
    err.rethrow();
    return out;
}

}  // namespace semidp::kernels
