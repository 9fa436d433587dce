#include "planewalk/oracle.h"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "planewalk/arrangement.h"

namespace planewalk {

namespace {

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt b = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

bool trivially_embeddable(const Walk& w) { return w.empty() || w.constant(); }

// Disks keyed by vertex, with the index of the last searched corridor whose
// order they depend on: a disk is checked as soon as that corridor is set.
struct DiskSchedule {
  std::vector<std::pair<std::string, int>> disks;  // vertex, ready index

  DiskSchedule(const StripSystem& s, const std::vector<Edge>& searched) {
    for (const auto& [v, arcs] : s.disks) {
      if (arcs.size() < 2) continue;
      int ready = -1;
      for (std::size_t k = 0; k < searched.size(); ++k)
        if (searched[k].incident(v)) ready = static_cast<int>(k);
      disks.push_back({v, ready});
    }
  }

  std::vector<std::string> ready_at(int k) const {
    std::vector<std::string> out;
    for (const auto& [v, ready] : disks)
      if (ready == k) out.push_back(v);
    return out;
  }
};

bool disk_free_of_crossings(const StripSystem& s, const std::string& v,
                            const CorridorOrder& order, bool pairs_only) {
  const auto& arcs = s.disks.at(v);
  const auto slots = disk_slots(s, v, order);
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (pairs_only && arcs[i].walk == arcs[j].walk) continue;
      if (arcs_interleave(slots, arcs[i], arcs[j])) return false;
    }
  return true;
}

// --- disjoinable search -----------------------------------------------------
//
// A corridor's state is its label pattern (walk indices in transverse order).
// Strand placement within the pattern happens per end, inside the disk check.

struct PairCorridor {
  Edge edge;
  std::vector<Strand> k_strands, l_strands;  // each ascending by step
  std::vector<int> pattern;                  // current labels, |k|+|l| entries
};

// All ways to fill the pattern of every corridor end at this disk with the
// actual strands of its class, until one makes every K-arc avoid every L-arc.
bool disk_feasible(const StripSystem& s, const std::string& v,
                   const std::vector<PairCorridor>& corridors) {
  std::vector<const PairCorridor*> ends;
  for (const PairCorridor& c : corridors)
    if (c.edge.incident(v) && !(c.k_strands.empty() && c.l_strands.empty()))
      ends.push_back(&c);

  CorridorOrder order;
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == ends.size()) return disk_free_of_crossings(s, v, order, true);
    const PairCorridor& c = *ends[i];
    std::vector<Strand> ks = c.k_strands, ls = c.l_strands;
    do {
      do {
        std::vector<Strand> filled;
        std::size_t nk = 0, nl = 0;
        for (int label : c.pattern) filled.push_back(label == 0 ? ks[nk++] : ls[nl++]);
        order[c.edge] = filled;
        if (place(i + 1)) return true;
      } while (std::next_permutation(ls.begin(), ls.end()));
    } while (std::next_permutation(ks.begin(), ks.end()));
    return false;
  };
  return place(0);
}

}  // namespace

OracleResult oracle_approximable(const Instance& inst, const BigInt& budget) {
  OracleResult r;
  if (trivially_embeddable(inst.walk)) {
    r.status = OracleStatus::Yes;
    r.bound = 1;
    r.witness = CorridorOrder{};
    return r;
  }

  const StripSystem s = build_strips(inst);
  r.bound = 1;
  for (const auto& [e, strands] : s.corridors) r.bound *= factorial(strands.size());
  if (r.bound > budget) {
    r.status = OracleStatus::BudgetExceeded;
    return r;
  }

  std::vector<Edge> searched;
  for (const auto& [e, strands] : s.corridors)
    if (strands.size() >= 2) searched.push_back(e);
  const DiskSchedule schedule(s, searched);

  CorridorOrder order = s.corridors;
  const auto disks_ok = [&](int k) {
    for (const std::string& v : schedule.ready_at(k))
      if (!disk_free_of_crossings(s, v, order, false)) return false;
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == searched.size()) return true;
    std::vector<Strand> perm = s.corridors.at(searched[k]);  // ascending
    do {
      order[searched[k]] = perm;
      if (disks_ok(static_cast<int>(k)) && search(k + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };

  if (disks_ok(-1) && search(0)) {
    r.status = OracleStatus::Yes;
    r.witness = order;
  } else {
    r.status = OracleStatus::No;
  }
  return r;
}

OracleResult oracle_disjoinable(const Instance& K, const Instance& L,
                                const BigInt& budget) {
  OracleResult r;
  if (trivially_embeddable(K.walk) || trivially_embeddable(L.walk)) {
    r.status = OracleStatus::Yes;
    r.bound = 1;
    return r;
  }

  const auto [k, l] = overlay_pair(K, L);
  const StripSystem s = build_strips_pair(k, l);

  std::vector<PairCorridor> corridors;
  for (const auto& [e, strands] : s.corridors) {
    PairCorridor c;
    c.edge = e;
    for (const Strand& st : strands)
      (st.walk == 0 ? c.k_strands : c.l_strands).push_back(st);
    c.pattern.assign(c.k_strands.size(), 0);
    c.pattern.insert(c.pattern.end(), c.l_strands.size(), 1);
    corridors.push_back(std::move(c));
  }

  r.bound = 1;
  for (const PairCorridor& c : corridors) {
    const std::size_t nk = c.k_strands.size(), nl = c.l_strands.size();
    r.bound *= binomial(nk + nl, nk);
    r.bound *= factorial(nk) * factorial(nl);  // one end...
    r.bound *= factorial(nk) * factorial(nl);  // ...and the other
  }
  if (r.bound > budget) {
    r.status = OracleStatus::BudgetExceeded;
    return r;
  }

  std::vector<Edge> searched;
  for (const PairCorridor& c : corridors)
    if (c.pattern.size() >= 2 && !c.k_strands.empty() && !c.l_strands.empty())
      searched.push_back(c.edge);
  const DiskSchedule schedule(s, searched);

  auto corridor_of = [&corridors](const Edge& e) -> PairCorridor& {
    for (PairCorridor& c : corridors)
      if (c.edge == e) return c;
    throw std::logic_error("corridor lookup");
  };

  const auto disks_ok = [&](int at) {
    for (const std::string& v : schedule.ready_at(at))
      if (!disk_feasible(s, v, corridors)) return false;
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t at) -> bool {
    if (at == searched.size()) return true;
    PairCorridor& c = corridor_of(searched[at]);
    std::vector<int> pattern = c.pattern;  // ascending: all K before all L
    do {
      c.pattern = pattern;
      if (disks_ok(static_cast<int>(at)) && search(at + 1)) return true;
    } while (std::next_permutation(pattern.begin(), pattern.end()));
    c.pattern = pattern;
    return false;
  };

  r.status = disks_ok(-1) && search(0) ? OracleStatus::Yes : OracleStatus::No;
  return r;
}

}  // namespace planewalk
