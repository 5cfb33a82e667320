#ifndef KDIS_SEARCH_HPP
#define KDIS_SEARCH_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "kdis/generate.hpp"
#include "kdis/graph.hpp"

namespace kdis {

/// Outcome of an exhaustive per-order search.  Witness lists are truncated
/// at 100 graphs; witnesses_total keeps the exact number.  elapsed_seconds
/// is informational and deliberately left out of the JSON form so reports
/// stay byte-identical across runs and worker counts.
struct SearchReport {
    int n = 0;
    int k = 1;
    Family family = Family::All;
    long long optimum = 0;
    std::vector<std::string> witnesses;
    long long witnesses_total = 0;
    long long graphs_examined = 0;
    double elapsed_seconds = 0.0;
};

inline constexpr int kWitnessCap = 100;

/// Maximum k-DIS count over all order-n members of the family, with every
/// attaining class as a witness.  Every generated family member is scored.
SearchReport compute_mi_table(int n, int k, Family family, int jobs = 0);

/// Smallest order where some graph has at least t k-DISes.
struct MResult {
    int k = 0;
    int t = 0;
    bool conclusive = false;
    int m_value = -1;
    std::string witness;   // first attaining graph in generation order
    int searched_up_to = 0;
};

/// Ascends n = k+1, k+2, ... scoring every class exhaustively, so a
/// conclusive result certifies all smaller orders.  Exceeding n_budget
/// yields an inconclusive result, not an error.
MResult compute_m(int k, int t, int n_budget = 9, int jobs = 0);

nlohmann::ordered_json to_json(const SearchReport& r);
nlohmann::ordered_json to_json(const MResult& r);

} // namespace kdis

#endif
