#include "../search_grid.hpp"
#include "mlt/search.hpp"

namespace mlt {

SearchOutcome search_min_k_serial(const SearchConfig& config) {
  validate(config);
  SearchOutcome outcome;
  auto consider = [&](const ConvexPolygon& p) {
    ++outcome.searched;
    if (auto rec = detail::evaluate(p, config)) outcome.records.push_back(std::move(*rec));
  };
  if (config.candidates) {
    for (const auto& p : *config.candidates) {
      if (p.size() == static_cast<std::size_t>(config.edge_count)) consider(p);
    }
  } else {
    enumerate_candidates(config, consider);
  }
  detail::sort_records(outcome.records);
  return outcome;
}

}  // namespace mlt
