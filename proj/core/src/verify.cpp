#include "chunkph/verify.hpp"

#include <algorithm>

#include "chunkph/io.hpp"

namespace chunkph {

bool verify_report::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const verify_check& c) { return c.pass; });
}

verify_report verify_matrix(const boundary_matrix& m, const verify_options& opts) {
    verify_report report;
    auto add = [&](std::string name, bool pass, std::string detail = "") {
        report.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    auto violations = validate(m);
    if (!violations.empty()) {
        add("matrix-validation", false, violations.front());
        return report;
    }
    add("matrix-validation", true);

    const unsigned max_workers = std::max(1u, opts.max_workers);
    const chunk_partition parts = make_sqrt_partition(m.size());

    const reduction_result standard = reduce_standard(m);
    const reduction_result twist = reduce_twist(m);
    const reduction_result compress = reduce_compress(m);
    const reduction_result chunk_one = reduce_chunk(m, parts, 1);
    const reduction_result chunk_max = reduce_chunk(m, parts, max_workers);

    const std::string reference = pairs_to_string(standard.pairing);
    const std::uint64_t reference_digest = fnv1a64(reference);
    struct run {
        const char* name;
        const reduction_result* result;
    };
    const run runs[] = {{"twist", &twist},
                        {"compress", &compress},
                        {"chunk-w1", &chunk_one},
                        {"chunk-wmax", &chunk_max}};
    bool digests_equal = true;
    std::string digest_detail;
    for (const run& r : runs) {
        if (fnv1a64(pairs_to_string(r.result->pairing)) != reference_digest) {
            digests_equal = false;
            digest_detail = std::string(r.name) + " pairing differs from standard";
            break;
        }
    }
    add("engine-digests-equal", digests_equal, digest_detail);

    auto geometry = check_pairing(standard.pairing, m);
    add("pairing-geometry", geometry.empty(), geometry.empty() ? "" : geometry.front());

    add("clearing-economy", twist.stats.additions <= standard.stats.additions,
        twist.stats.additions <= standard.stats.additions
            ? ""
            : "twist used " + std::to_string(twist.stats.additions) + " additions, standard " +
                  std::to_string(standard.stats.additions));

    {
        const boundary_matrix dual = anti_transpose(m);
        const persistence_pairing mapped = map_dual_pairing(reduce_twist(dual).pairing);
        add("duality", mapped == standard.pairing,
            mapped == standard.pairing ? "" : "anti-transpose pairing does not map onto the primal pairing");
    }

    {
        local_reduction_result local = local_chunk_reduction(m, parts, max_workers);
        const index_t l_min = parts.min_chunk_size();
        bool bound_ok = true;
        std::string bound_detail;
        for (const index_pair& p : chunk_one.pairing.pairs) {
            if (std::binary_search(local.pairing.pairs.begin(), local.pairing.pairs.end(), p)) continue;
            if (p.second - p.first < l_min) {
                bound_ok = false;
                bound_detail = "global pair (" + std::to_string(p.first) + ", " +
                               std::to_string(p.second) + ") has index persistence below " +
                               std::to_string(l_min);
                break;
            }
        }
        add("global-pair-persistence-bound", bound_ok, bound_detail);

        mark_active_entries(local.reduced, local.state, local.lookup, max_workers);
        compress_scratch scratch(m.size());
        std::uint64_t additions = 0, zeroings = 0;
        bool compressed_ok = true;
        std::string compress_detail;
        for (index_t k = 1; k <= m.size() && compressed_ok; ++k) {
            if (local.state.paired(k)) continue;
            compress_column(local.reduced, k, local.state, local.lookup, scratch, additions, zeroings);
            for (index_t r : local.reduced[static_cast<std::size_t>(k - 1)]) {
                if (local.state.paired(r)) {
                    compressed_ok = false;
                    compress_detail = "column " + std::to_string(k) + " keeps an entry at paired row " +
                                      std::to_string(r);
                    break;
                }
            }
        }
        add("compression-postcondition", compressed_ok, compress_detail);
    }

    return report;
}

}  // namespace chunkph
