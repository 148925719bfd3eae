#include "timeprice/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include "timeprice/geometry.hpp"

namespace timeprice {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double tie_eps(double a) { return 1e-12 * std::max(1.0, std::fabs(a)); }

// All candidate segments: every type pair with positive slope and
// nonnegative intercept, plus one horizontal per distinct valuation
// (anchored at the largest-theta type carrying it, the loosest anchor for
// the cross-order constraint).
std::vector<CandidateSegment> enumerate_candidates(
    const DiscreteTypeDistribution& dist) {
  const auto& types = dist.types();
  std::vector<CandidateSegment> cands;

  std::vector<std::pair<double, std::size_t>> levels;  // (v, max-theta index)
  for (std::size_t i = 0; i < types.size(); ++i) {
    auto it = std::find_if(levels.begin(), levels.end(), [&](const auto& l) {
      return l.first == types[i].v;
    });
    if (it == levels.end()) {
      levels.emplace_back(types[i].v, i);
    } else if (types[i].theta > types[it->second].theta) {
      it->second = i;
    }
  }
  for (const auto& [v, idx] : levels) {
    cands.push_back(CandidateSegment{Segment{0.0, v}, idx, idx});
  }

  for (std::size_t i = 0; i < types.size(); ++i) {
    for (std::size_t j = i + 1; j < types.size(); ++j) {
      if (types[i].theta == types[j].theta) continue;
      Segment seg = segment_through(types[i], types[j]);
      if (seg.slope <= 0.0) continue;
      if (seg.intercept < -tol_scale(seg.intercept, types[i].v)) continue;
      seg.intercept = std::max(seg.intercept, 0.0);
      cands.push_back(CandidateSegment{seg, i, j});
    }
  }

  std::sort(cands.begin(), cands.end(),
            [](const CandidateSegment& a, const CandidateSegment& b) {
              if (a.seg.slope != b.seg.slope) return a.seg.slope < b.seg.slope;
              if (a.seg.intercept != b.seg.intercept) {
                return a.seg.intercept < b.seg.intercept;
              }
              if (a.left != b.left) return a.left < b.left;
              return a.right < b.right;
            });
  return cands;
}

// True when (value v1, length l1, final intercept f1) beats (v2, l2, f2)
// under the fewer-segments-then-lower-final-intercept tie rule.
bool better(double v1, int l1, double f1, double v2, int l2, double f2) {
  if (v1 == kNegInf) return false;
  if (v2 == kNegInf) return true;
  double eps = tie_eps(std::max(std::fabs(v1), std::fabs(v2)));
  if (v1 > v2 + eps) return true;
  if (v1 < v2 - eps) return false;
  if (l1 != l2) return l1 < l2;
  return f1 < f2;
}

struct DpEngine {
  // One feasible hand-off out of a sloped segment: the cross point x where a
  // flatter successor takes over, and the chain value earned on [x, +inf)
  // minus gain(s, x). Querying the segment at activation point x_in then
  // yields gain(s, x_in) + value, and restricting to entries with x >= x_in
  // enforces increasing cross points along the chain.
  struct Entry {
    double x = 0.0;
    double value = kNegInf;
    int succ = -1;
    int length = 0;
    double final_intercept = kInfinity;
  };

  // Entries sorted by cross point; best_from[i] indexes the best entry among
  // [i, end) under the value/length/final-intercept order.
  struct Frontier {
    std::vector<Entry> entries;
    std::vector<int> best_from;
  };

  struct Pick {
    double value = kNegInf;
    int entry = -1;  // frontier index for sloped segments, -1 for terminal
    int length = 0;
    double final_intercept = kInfinity;
  };

  const DiscreteTypeDistribution& dist;
  std::vector<CandidateSegment> cands;
  std::vector<MassProfile> profiles;

  explicit DpEngine(const DiscreteTypeDistribution& d)
      : dist(d), cands(enumerate_candidates(d)) {
    ProfileSet set(dist);
    profiles.reserve(cands.size());
    for (const CandidateSegment& c : cands) profiles.push_back(set.build(c.seg));
  }

  // intercept-weighted mass above segment s on [x, +inf); chain revenue is a
  // telescoping sum of these, split at the chain's cross points.
  double gain(std::size_t s, double x) const {
    return cands[s].seg.intercept * profiles[s].query(x, kInfinity);
  }

  // Best chain that starts with segment s active from x_in and keeps every
  // later cross point >= x_in. Horizontal segments end the chain.
  Pick query(const std::vector<Frontier>& fr, std::size_t s,
             double x_in) const {
    if (cands[s].seg.slope == 0.0) {
      return Pick{gain(s, x_in), -1, 1, cands[s].seg.intercept};
    }
    const Frontier& f = fr[s];
    double lo = x_in - tol_scale(x_in);
    auto it = std::lower_bound(
        f.entries.begin(), f.entries.end(), lo,
        [](const Entry& e, double v) { return e.x < v; });
    if (it == f.entries.end()) return Pick{};
    int idx = f.best_from[static_cast<std::size_t>(it - f.entries.begin())];
    const Entry& e = f.entries[static_cast<std::size_t>(idx)];
    return Pick{gain(s, x_in) + e.value, idx, e.length, e.final_intercept};
  }

  // Collects every feasible hand-off out of sloped segment s, scoring each
  // successor via `tail` (already built for all flatter segments).
  void build_frontier(std::vector<Frontier>& fr,
                      const std::vector<Frontier>& tail, std::size_t s) {
    std::vector<Entry> entries;
    for (std::size_t t = 0; t < cands.size(); ++t) {
      if (cands[t].seg.slope >= cands[s].seg.slope) continue;
      if (cands[t].seg.intercept < cands[s].seg.intercept) continue;
      double x = cross(cands[s].seg, cands[t].seg);
      if (x < -tol_scale(x)) continue;
      Pick p = query(tail, t, x);
      if (p.value == kNegInf) continue;
      entries.push_back(Entry{x, p.value - gain(s, x), static_cast<int>(t),
                              p.length + 1, p.final_intercept});
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) {
                if (a.x != b.x) return a.x < b.x;
                return a.succ < b.succ;
              });
    std::vector<int> best_from(entries.size());
    int best = -1;
    for (std::size_t i = entries.size(); i-- > 0;) {
      const Entry& e = entries[i];
      if (best < 0 ||
          better(e.value, e.length, e.final_intercept,
                 entries[static_cast<std::size_t>(best)].value,
                 entries[static_cast<std::size_t>(best)].length,
                 entries[static_cast<std::size_t>(best)].final_intercept)) {
        best = static_cast<int>(i);
      }
      best_from[i] = best;
    }
    fr[s] = Frontier{std::move(entries), std::move(best_from)};
  }

  // frs.back() is the top layer; entry links in layer b resolve against
  // layer b-1 (the uncapped solve passes a single self-referential layer).
  SolveResult finish(const std::vector<std::vector<Frontier>>& frs) const {
    const std::vector<Frontier>& top = frs.back();
    Pick best;
    std::size_t best_s = 0;
    for (std::size_t s = 0; s < cands.size(); ++s) {
      Pick p = query(top, s, 0.0);
      if (better(p.value, p.length, p.final_intercept, best.value, best.length,
                 best.final_intercept)) {
        best = p;
        best_s = s;
      }
    }
    if (best.value == kNegInf) {
      throw std::logic_error("no feasible chain found");
    }

    std::vector<Segment> chain;
    std::size_t li = frs.size() - 1;
    std::size_t cur = best_s;
    Pick p = best;
    while (true) {
      chain.push_back(cands[cur].seg);
      if (p.entry < 0) break;
      const Entry& e = frs[li][cur].entries[static_cast<std::size_t>(p.entry)];
      cur = static_cast<std::size_t>(e.succ);
      if (li > 0) --li;
      p = query(frs[li], cur, e.x);
    }
    SeparationLine line = SeparationLine::from_envelope(std::move(chain));
    PricingFunction pricing = pricing_from_separation(line);
    Report report = evaluate_discrete(line, dist);
    double revenue = report.revenue;
    return SolveResult{std::move(line), std::move(pricing), std::move(report),
                       revenue};
  }

  SolveResult solve_uncapped() {
    std::vector<std::vector<Frontier>> frs(1);
    frs[0].resize(cands.size());
    for (std::size_t s = 0; s < cands.size(); ++s) {
      if (cands[s].seg.slope == 0.0) continue;
      build_frontier(frs[0], frs[0], s);
    }
    return finish(frs);
  }

  SolveResult solve_capped(int k) {
    // Layer b allows chains of at most b+1 segments from the queried one on.
    std::vector<std::vector<Frontier>> frs(
        static_cast<std::size_t>(k),
        std::vector<Frontier>(cands.size()));
    for (int b = 1; b < k; ++b) {
      for (std::size_t s = 0; s < cands.size(); ++s) {
        if (cands[s].seg.slope == 0.0) continue;
        build_frontier(frs[static_cast<std::size_t>(b)],
                       frs[static_cast<std::size_t>(b - 1)], s);
      }
    }
    return finish(frs);
  }
};

}  // namespace

SolveResult solve_optimal(const DiscreteTypeDistribution& dist) {
  DpEngine engine(dist);
  return engine.solve_uncapped();
}

SolveResult solve_kstep(const DiscreteTypeDistribution& dist, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::size_t cap = dist.size() + 1;
  if (static_cast<std::size_t>(k) >= cap) return solve_optimal(dist);
  DpEngine engine(dist);
  return engine.solve_capped(k);
}

PostedResult solve_posted(const DiscreteTypeDistribution& dist) {
  std::vector<double> prices;
  for (const BuyerType& t : dist.types()) prices.push_back(t.v);
  std::sort(prices.begin(), prices.end());
  prices.erase(std::unique(prices.begin(), prices.end()), prices.end());

  PostedResult best{0.0, -1.0};
  for (double price : prices) {
    double mass = 0.0;
    for (const BuyerType& t : dist.types()) {
      if (approx_geq(t.v, price)) mass += t.prob;
    }
    double revenue = price * mass;
    if (revenue > best.revenue + tie_eps(revenue)) {
      best = PostedResult{price, revenue};
    }
  }
  return best;
}

SolveResult brute_force_optimal(const DiscreteTypeDistribution& dist) {
  if (dist.size() > 7) {
    throw std::invalid_argument(
        "brute_force_optimal: support size exceeds the hard cap of 7");
  }
  const auto& types = dist.types();

  // Candidate lines, deduplicated: horizontals at every valuation plus every
  // positively sloped pair line. Enumeration and chain assembly are kept
  // independent of the DP.
  std::set<std::pair<double, double>> seen;
  std::vector<Segment> lines;
  auto add = [&](double slope, double intercept) {
    if (intercept < -tol_scale(intercept)) return;
    intercept = std::max(intercept, 0.0);
    if (seen.insert({slope, intercept}).second) {
      lines.push_back(Segment{slope, intercept});
    }
  };
  for (const BuyerType& t : types) add(0.0, t.v);
  for (std::size_t i = 0; i < types.size(); ++i) {
    for (std::size_t j = i + 1; j < types.size(); ++j) {
      double dtheta = types[j].theta - types[i].theta;
      if (dtheta == 0.0) continue;
      double slope = (types[j].v - types[i].v) / dtheta;
      if (slope <= 0.0) continue;
      add(slope, types[i].v - slope * types[i].theta);
    }
  }
  std::sort(lines.begin(), lines.end(), [](const Segment& a, const Segment& b) {
    if (a.slope != b.slope) return a.slope > b.slope;
    return a.intercept < b.intercept;
  });

  double best_revenue = kNegInf;
  std::vector<Segment> best_chain;
  std::vector<Segment> chain;

  auto score = [&]() {
    SeparationLine line(chain);
    Report report = evaluate_discrete(line, dist);
    if (report.revenue > best_revenue) {
      best_revenue = report.revenue;
      best_chain = chain;
    }
  };

  // Depth-first over strictly-decreasing-slope chains with strictly
  // increasing nonnegative cross points; every horizontal tail closes one.
  auto extend = [&](auto&& self, std::size_t from, double last_cross) -> void {
    const Segment last = chain.back();  // copy: push_back below reallocates
    if (last.slope == 0.0) {
      score();
      return;
    }
    for (std::size_t i = from; i < lines.size(); ++i) {
      if (lines[i].slope >= last.slope) continue;
      if (lines[i].intercept <= last.intercept) continue;
      double x = (lines[i].intercept - last.intercept) /
                 (last.slope - lines[i].slope);
      if (x < 0.0 || x <= last_cross) continue;
      chain.push_back(lines[i]);
      self(self, i + 1, x);
      chain.pop_back();
    }
  };

  for (std::size_t i = 0; i < lines.size(); ++i) {
    chain.assign(1, lines[i]);
    extend(extend, i + 1, -kInfinity);
  }
  if (best_revenue == kNegInf) {
    throw std::logic_error("brute force found no valid chain");
  }

  SeparationLine line(best_chain);
  PricingFunction pricing = pricing_from_separation(line);
  Report report = evaluate_discrete(line, dist);
  double revenue = report.revenue;
  return SolveResult{std::move(line), std::move(pricing), std::move(report),
                     revenue};
}

}  // namespace timeprice
