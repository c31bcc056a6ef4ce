#include "minhom/intervals.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "minhom/error.hpp"

namespace minhom {

namespace {

Rational power_of_half(std::size_t exponent) {
  boost::multiprecision::cpp_int denominator = 1;
  denominator <<= exponent;
  return Rational(1, denominator);
}

// 1-based leftmost/rightmost neighbor positions of `subject` among the
// vertices listed in `other_order`; nullopt without neighbors there.
std::optional<std::pair<std::size_t, std::size_t>> neighbor_span(
    const Graph& h, VertexIndex subject,
    const std::vector<VertexIndex>& other_order) {
  std::optional<std::pair<std::size_t, std::size_t>> span;
  for (std::size_t k = 0; k < other_order.size(); ++k) {
    if (!h.adjacent(subject, other_order[k])) continue;
    if (!span) span.emplace(k + 1, k + 1);
    span->second = k + 1;
  }
  return span;
}

bool inclusion_free(const IntervalFamily& family) {
  for (auto a = family.begin(); a != family.end(); ++a) {
    for (auto b = std::next(a); b != family.end(); ++b) {
      if (a->second.contains(b->second) || b->second.contains(a->second)) {
        return false;
      }
    }
  }
  return true;
}

bool well_formed(const IntervalFamily& family) {
  return std::all_of(family.begin(), family.end(), [](const auto& entry) {
    return entry.second.left <= entry.second.right;
  });
}

std::optional<VertexIndex> lookup(const Graph& h, const std::string& name) {
  return h.index_of(name);
}

std::vector<VertexIndex> order_by_left(const Graph& h,
                                       const IntervalFamily& family) {
  std::vector<std::pair<const Interval*, VertexIndex>> entries;
  for (const auto& [name, interval] : family) {
    entries.emplace_back(&interval, h.require_index(name));
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.first->left < b.first->left;
  });
  for (std::size_t k = 1; k < entries.size(); ++k) {
    if (entries[k - 1].first->left == entries[k].first->left) {
      throw Error(ErrorCode::kTiedEndpoints,
                  "intervals of '" + h.name(entries[k - 1].second) +
                      "' and '" + h.name(entries[k].second) +
                      "' share a left endpoint");
    }
  }
  std::vector<VertexIndex> order;
  for (const auto& entry : entries) order.push_back(entry.second);
  return order;
}

IntervalRep bigraph_intervals(const Graph& h, const BigraphOrdering& ord) {
  BigraphIntervals rep;
  const std::size_t q = ord.black.size();
  const Rational quarter(1, 4);
  const Rational half(1, 2);
  const Rational far = Rational(q);
  for (std::size_t k = 0; k < ord.black.size(); ++k) {
    const std::size_t j = k + 1;
    const VertexIndex v = ord.black[k];
    Interval interval;
    if (h.degree(v) == 0) {
      Rational point = far + 1 + power_of_half(j + 2);
      interval = {point, point};
    } else {
      interval = {Rational(j) - quarter, Rational(j) + quarter};
    }
    rep.black.emplace(h.name(v), std::move(interval));
  }
  for (std::size_t k = 0; k < ord.white.size(); ++k) {
    const std::size_t i = k + 1;
    const VertexIndex u = ord.white[k];
    Interval interval;
    if (auto span = neighbor_span(h, u, ord.black)) {
      const Rational shift = power_of_half(i);
      interval = {Rational(span->first) - shift,
                  Rational(span->second) + half - shift};
    } else {
      Rational point = far + half + power_of_half(i + 2);
      interval = {point, point};
    }
    rep.white.emplace(h.name(u), std::move(interval));
  }
  return rep;
}

IntervalRep reflexive_intervals(const Graph& h, const ReflexiveOrdering& ord) {
  ReflexiveIntervals rep;
  const std::size_t p = ord.order.size();
  for (std::size_t k = 0; k < p; ++k) {
    const std::size_t i = k + 1;
    std::size_t rightmost = i;
    for (std::size_t m = k + 1; m < p; ++m) {
      if (h.adjacent(ord.order[k], ord.order[m])) rightmost = m + 1;
    }
    rep.intervals.emplace(
        h.name(ord.order[k]),
        Interval{Rational(i), Rational(rightmost) + Rational(i, p + 1)});
  }
  return rep;
}

}  // namespace

IntervalRep ordering_to_intervals(const Graph& h,
                                  const MinMaxOrdering& ordering) {
  bool valid = false;
  try {
    valid = verify_ordering(h, ordering);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidOrdering, e.what());
  }
  if (!valid) {
    throw Error(ErrorCode::kInvalidOrdering,
                "ordering violates the Min-Max condition");
  }
  IntervalRep rep =
      std::holds_alternative<ReflexiveOrdering>(ordering)
          ? reflexive_intervals(h, std::get<ReflexiveOrdering>(ordering))
          : bigraph_intervals(h, std::get<BigraphOrdering>(ordering));
  if (!verify_representation(h, rep)) {
    throw Error(ErrorCode::kInternalInconsistency,
                "constructed interval representation does not realize the "
                "graph");
  }
  return rep;
}

bool verify_representation(const Graph& h, const IntervalRep& rep) {
  if (const auto* refl = std::get_if<ReflexiveIntervals>(&rep)) {
    const auto& family = refl->intervals;
    if (family.size() != h.size() || !h.is_reflexive() ||
        !well_formed(family)) {
      return false;
    }
    std::vector<std::pair<VertexIndex, const Interval*>> entries;
    for (const auto& [name, interval] : family) {
      auto v = lookup(h, name);
      if (!v) return false;
      entries.emplace_back(*v, &interval);
    }
    for (std::size_t a = 0; a < entries.size(); ++a) {
      for (std::size_t b = a + 1; b < entries.size(); ++b) {
        if (entries[a].second->intersects(*entries[b].second) !=
            h.adjacent(entries[a].first, entries[b].first)) {
          return false;
        }
      }
    }
    return inclusion_free(family);
  }

  const auto& big = std::get<BigraphIntervals>(rep);
  if (big.white.size() + big.black.size() != h.size() || !h.is_irreflexive() ||
      !well_formed(big.white) || !well_formed(big.black)) {
    return false;
  }
  std::vector<Side> side(h.size(), Side::kWhite);
  std::vector<bool> seen(h.size(), false);
  std::vector<std::pair<VertexIndex, const Interval*>> whites;
  std::vector<std::pair<VertexIndex, const Interval*>> blacks;
  auto collect = [&](const IntervalFamily& family, Side s, auto& out) {
    for (const auto& [name, interval] : family) {
      auto v = lookup(h, name);
      if (!v || seen[*v]) return false;
      seen[*v] = true;
      side[*v] = s;
      out.emplace_back(*v, &interval);
    }
    return true;
  };
  if (!collect(big.white, Side::kWhite, whites) ||
      !collect(big.black, Side::kBlack, blacks)) {
    return false;
  }
  for (const auto& [a, b] : h.edges()) {
    if (side[a] == side[b]) return false;
  }
  for (const auto& [u, ui] : whites) {
    for (const auto& [v, vi] : blacks) {
      if (ui->intersects(*vi) != h.adjacent(u, v)) return false;
    }
  }
  return inclusion_free(big.white) && inclusion_free(big.black);
}

MinMaxOrdering intervals_to_ordering(const Graph& h, const IntervalRep& rep) {
  if (!verify_representation(h, rep)) {
    throw Error(ErrorCode::kRepresentationMismatch,
                "interval representation does not realize the graph");
  }
  MinMaxOrdering ordering;
  if (const auto* refl = std::get_if<ReflexiveIntervals>(&rep)) {
    ordering = ReflexiveOrdering{order_by_left(h, refl->intervals)};
  } else {
    const auto& big = std::get<BigraphIntervals>(rep);
    ordering = BigraphOrdering{order_by_left(h, big.white),
                               order_by_left(h, big.black)};
  }
  if (!verify_ordering(h, ordering)) {
    throw Error(ErrorCode::kInternalInconsistency,
                "left-endpoint order of an inclusion-free representation "
                "failed the ordering verifier");
  }
  return ordering;
}

}  // namespace minhom
