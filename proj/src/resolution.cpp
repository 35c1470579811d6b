#include "l1m/resolution.hpp"

#include "l1m/cochain.hpp"

#include <memory>
#include <mutex>
#include <sstream>

namespace l1m {

namespace {
const Rational kResolutionT(-3, 2);
}

const ResolutionStage& delta_stage(int k) {
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<ResolutionStage>> cache;
    if (k < 1) throw std::invalid_argument("delta_stage: k >= 1");
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(k);
        if (it != cache.end()) return *it->second;
    }

    auto st = std::make_unique<ResolutionStage>();
    st->k = k;
    if (k == 1) {
        st->entries = {{bsa_operator(1, 1).eval_at(kResolutionT), bsa_operator(1, 2).eval_at(kResolutionT)}};
    } else {
        const int kk = k - 1;
        UEAElement s_1_3kp1 = bsa_operator(1, 3 * kk + 1).eval_at(kResolutionT);
        UEAElement s_2kp1_2 = as_operator(singular_vector(2 * kk + 1, 2, kResolutionT));
        UEAElement s_2kp1_1 = bsa_operator(2 * kk + 1, 1).eval_at(kResolutionT);
        UEAElement s_1_3kp2 = bsa_operator(1, 3 * kk + 2).eval_at(kResolutionT);
        UEAElement zero;
        st->entries = {{s_1_3kp1, s_2kp1_2},
                       {zero - s_2kp1_1, zero - s_1_3kp2}};
    }
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, std::move(st)).first;
    return *it->second;
}

void verify_exactness(int k) {
    if (k < 0) throw std::invalid_argument("verify_exactness: k >= 0");
    if (k == 0) {
        // augmentation: every delta_1 entry has positive weight, so the image
        // lies in the augmentation ideal
        for (const auto& row : delta_stage(1).entries)
            for (const auto& e : row) {
                auto w = e.weight();
                if (!w || *w < 1) throw ExactnessFailure("delta_1 entry with non-positive weight");
            }
        return;
    }
    const ResolutionStage& a = delta_stage(k);     // later applied
    const ResolutionStage& b = delta_stage(k + 1); // applied first
    const size_t rows = a.entries.size();
    const size_t mid = b.entries.size();
    const size_t cols = b.entries[0].size();
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            UEAElement acc;
            for (size_t l = 0; l < mid; ++l)
                acc += multiply(b.entries[l][j], a.entries[i][l]);
            if (!acc.is_zero()) {
                std::ostringstream os;
                os << "delta_" << k << " . delta_" << (k + 1) << " nonzero at (" << i << "," << j
                   << "): " << acc.str();
                throw ExactnessFailure(os.str());
            }
        }
}

DkMatrix dk_matrix(const ThreadSpec& spec, int k, long s) {
    if (k < 0) throw std::invalid_argument("dk_matrix: k >= 0");
    DkMatrix out;
    out.k = k;
    out.s = s;
    auto alive = [&spec](long g) {
        return spec.index_valid(static_cast<int>(g));
    };
    if (k == 0) {
        out.src_grades = {s};
        out.dst_grades = {s + 1, s + 2};
        const auto& d1 = delta_stage(1).entries[0];
        out.m = {{Rational(0)}, {Rational(0)}};
        if (alive(s)) {
            out.m[0][0] = sigma_value(spec, d1[0], static_cast<int>(s));
            out.m[1][0] = sigma_value(spec, d1[1], static_cast<int>(s));
        }
    } else {
        const long j1 = s + pent_minus(k), j2 = s + pent_plus(k);
        out.src_grades = {j1, j2};
        out.dst_grades = {s + pent_minus(k + 1), s + pent_plus(k + 1)};
        const auto& d = delta_stage(k + 1).entries; // 2x2
        out.m = {{Rational(0), Rational(0)}, {Rational(0), Rational(0)}};
        // D_k[r][c] = sigma(delta_{k+1}[c][r]) evaluated at the source grade j_c
        if (alive(j1)) {
            out.m[0][0] = sigma_value(spec, d[0][0], static_cast<int>(j1));
            out.m[1][0] = sigma_value(spec, d[0][1], static_cast<int>(j1));
        }
        if (alive(j2)) {
            out.m[0][1] = sigma_value(spec, d[1][0], static_cast<int>(j2));
            out.m[1][1] = sigma_value(spec, d[1][1], static_cast<int>(j2));
        }
    }
    for (long g : out.src_grades) out.src_alive.push_back(alive(g));
    for (long g : out.dst_grades) out.dst_alive.push_back(alive(g));
    return out;
}

namespace {

SparseMatrix masked_matrix(const DkMatrix& d) {
    std::vector<long> alive_src, alive_dst;
    for (size_t c = 0; c < d.src_alive.size(); ++c)
        if (d.src_alive[c]) alive_src.push_back(static_cast<long>(c));
    for (size_t r = 0; r < d.dst_alive.size(); ++r)
        if (d.dst_alive[r]) alive_dst.push_back(static_cast<long>(r));
    SparseMatrix m(static_cast<long>(alive_dst.size()), static_cast<long>(alive_src.size()));
    for (size_t r = 0; r < alive_dst.size(); ++r)
        for (size_t c = 0; c < alive_src.size(); ++c)
            m.set(static_cast<long>(r), static_cast<long>(c), d.m[alive_dst[r]][alive_src[c]]);
    return m;
}

} // namespace

ThreadCohomologyReport thread_cohomology(const ThreadSpec& spec, long s, int k_max) {
    ThreadCohomologyReport rep;
    rep.s = s;
    rep.k_max = k_max;
    std::vector<SparseMatrix> mats;
    for (int k = 0; k <= k_max; ++k) mats.push_back(masked_matrix(dk_matrix(spec, k, s)));
    for (int q = 0; q <= k_max; ++q) {
        const long src_dim = mats[q].cols();
        const long ker = src_dim - rank(mats[q]);
        const long img = q == 0 ? 0 : rank(mats[q - 1]);
        if (ker - img < 0) throw std::logic_error("thread_cohomology: negative dimension");
        rep.dims.push_back(ker - img);
    }
    return rep;
}

FiniteModule finite_module(const ThreadSpec& spec) {
    FiniteModule mod;
    mod.grades = spec.basis_indices();
    ThreadSpec copy = spec;
    mod.act = [copy](int i, int g) { return thread_act(copy, i, g); };
    return mod;
}

std::optional<CrossValidateMismatch> cross_validate(const ThreadSpec& spec, long s, int max_degree) {
    FiniteModule mod = finite_module(spec);
    ThreadCohomologyReport res = thread_cohomology(spec, s, max_degree);
    for (int q = 0; q <= max_degree; ++q) {
        long ce = module_cohomology(mod, q, static_cast<int>(s)).dim;
        if (ce != res.dims[q]) return CrossValidateMismatch{s, q, res.dims[q], ce};
    }
    return std::nullopt;
}

} // namespace l1m
