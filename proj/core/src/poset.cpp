#include "homalg/poset.hpp"

#include <algorithm>
#include <map>

#include "homalg/errors.hpp"

namespace homalg {

StratPoset::StratPoset(std::vector<Stratum> strata,
                       const std::vector<std::pair<std::string, std::string>>& relations, bool acyclicity_asserted)
    : strata_(std::move(strata)), acyclic_(acyclicity_asserted) {
  const std::size_t n = strata_.size();
  std::map<std::string, std::size_t> names;
  for (std::size_t i = 0; i < n; ++i) {
    if (strata_[i].name.empty()) throw PreconditionError("stratum with empty name");
    if (!names.emplace(strata_[i].name, i).second)
      throw PreconditionError("duplicate stratum '" + strata_[i].name + "'");
  }
  leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
  for (const auto& [lo, hi] : relations) {
    auto a = names.find(lo), b = names.find(hi);
    if (a == names.end()) throw PreconditionError("unknown stratum '" + lo + "' in relation");
    if (b == names.end()) throw PreconditionError("unknown stratum '" + hi + "' in relation");
    if (a->second == b->second) throw PreconditionError("relation '" + lo + "' < '" + hi + "' is reflexive");
    leq_[a->second * n + b->second] = 1;
  }
  // Warshall closure
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k * n + j]) leq_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq_[i * n + j] && leq_[j * n + i])
        throw PreconditionError("closure relation has a cycle through '" + strata_[i].name + "' and '" +
                                strata_[j].name + "'");
}

std::optional<std::size_t> StratPoset::find(const std::string& name) const {
  for (std::size_t i = 0; i < strata_.size(); ++i)
    if (strata_[i].name == name) return i;
  return std::nullopt;
}

std::size_t StratPoset::index(const std::string& name) const {
  auto i = find(name);
  if (!i) throw PreconditionError("unknown stratum '" + name + "'");
  return *i;
}

std::vector<std::pair<std::size_t, std::size_t>> StratPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (less(a, c) && less(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

std::optional<std::size_t> Quiver::arrow(std::size_t source, std::size_t target) const {
  for (std::size_t a : outgoing_.at(source))
    if (arrows_[a].target == target) return a;
  return std::nullopt;
}

Quiver build_quiver(const StratPoset& p) {
  Quiver q;
  q.poset_ = p;
  const std::size_t n = p.size();
  q.incoming_.assign(n, {});
  q.outgoing_.assign(n, {});
  for (auto [a, b] : p.covers()) {
    q.outgoing_[a].push_back(q.arrows_.size());
    q.incoming_[b].push_back(q.arrows_.size());
    q.arrows_.push_back({a, b});
  }
  // number of strict predecessors is a linear extension key
  std::vector<std::size_t> below(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (p.less(a, b)) ++below[b];
  q.order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) q.order_[i] = i;
  std::stable_sort(q.order_.begin(), q.order_.end(),
                   [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  return q;
}

}  // namespace homalg
