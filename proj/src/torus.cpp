#include "torus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace tightcount::torus {

namespace {

constexpr std::int64_t kMaxSize = 1'000'000;

std::int64_t positive_mod(std::int64_t a, std::int64_t m) {
  return ((a % m) + m) % m;
}

// One rejoining chirality per parity; flipping side or orientation mirrors.
int site_parity(const BypassSite& site) {
  int par = site.side == Side::interior ? 1 : 0;
  if (site.orientation == Orientation::b) par ^= 1;
  return par;
}

bool sites_cancel(const BypassSite& a, const BypassSite& b) {
  return a.center == b.center && site_parity(a) != site_parity(b);
}

// Attaching arcs with disjoint point triples commute.
bool sites_commute(const BypassSite& a, const BypassSite& b,
                   std::int64_t size) {
  std::int64_t d = positive_mod(a.center - b.center, size);
  d = std::min(d, size - d);
  return d >= 3;
}

bool site_order_before(const BypassSite& a, const BypassSite& b) {
  if (a.center != b.center) return a.center < b.center;
  return site_parity(a) < site_parity(b);
}

}  // namespace

DividingSet::DividingSet(std::int64_t n_, ncf::Slope slope_)
    : n(n_), slope(slope_) {
  if (n < 1) {
    throw std::domain_error("dividing set: n must be positive");
  }
}

DividingSet normalize(std::int64_t n, std::int64_t p, std::int64_t q) {
  if (n < 1) {
    throw std::domain_error("normalize: n must be positive");
  }
  if (p == 0 && q == 0) {
    throw std::domain_error("normalize: (p, q) must not be (0, 0)");
  }
  if (std::gcd(std::abs(p), std::abs(q)) != 1) {
    throw std::domain_error("normalize: p and q must be coprime");
  }
  if (p == 0) {
    throw no_tight_structures_error(
        "normalize: p = 0 admits no tight contact structure");
  }
  // (n, p, q) and (n, -p, -q) name the same multicurve; write the first
  // slot negative, then twist q into (0, p].
  if (p > 0) {
    p = -p;
    q = -q;
  }
  std::int64_t pp = -p;
  std::int64_t qq = positive_mod(q, pp);
  if (qq == 0) qq = pp;  // coprimality forces pp == 1 here
  return DividingSet(n, ncf::Slope(pp, qq));
}

std::int64_t twisting_number(const DividingSet& ds) {
  return -ds.n * ds.slope.p;
}

std::string to_string(BypassOutcome outcome) {
  switch (outcome) {
    case BypassOutcome::trivial:
      return "Trivial";
    case BypassOutcome::decrease_by_two:
      return "DecreaseBy2";
    case BypassOutcome::increase_by_two:
      return "IncreaseBy2";
    case BypassOutcome::dehn_twist:
      return "DehnTwist";
  }
  return "?";
}

namespace {

// ---------------------------------------------------------------------------
// Strand diagram.
//
// The torus is cut along the meridian; the multicurve meets the cut circle
// at `size` points.  Each point i has an east germ (2i) and a west germ
// (2i+1); the curve always passes through the point joining its two germs.
// Strands between germs form a perfect matching; each strand carries exact
// (lambda, mu) data, with lambda counting annulus passes (+1 eastward) and
// mu in units of 1/size of a meridian loop, both as traversed u -> v.
// ---------------------------------------------------------------------------

constexpr std::int64_t east(std::int64_t point) { return 2 * point; }
constexpr std::int64_t west(std::int64_t point) { return 2 * point + 1; }
constexpr std::int64_t point_of(std::int64_t germ) { return germ / 2; }
constexpr bool is_west(std::int64_t germ) { return (germ & 1) != 0; }

struct Strand {
  std::int64_t u, v;
  std::int64_t lam, mu;
};

struct Diagram {
  std::int64_t size = 0;
  std::vector<Strand> strands;
  std::vector<std::int32_t> at;  // germ -> strand index

  void reindex() {
    at.assign(2 * size, -1);
    for (std::size_t i = 0; i < strands.size(); ++i) {
      at[strands[i].u] = static_cast<std::int32_t>(i);
      at[strands[i].v] = static_cast<std::int32_t>(i);
    }
  }
};

Diagram fresh_diagram(const DividingSet& ds) {
  Diagram d;
  d.size = 2 * ds.n * ds.slope.p;
  const std::int64_t step = 2 * ds.n * ds.slope.q;  // 0 < step <= size
  d.strands.reserve(d.size);
  for (std::int64_t i = 0; i < d.size; ++i) {
    d.strands.push_back(
        {east(i), west(positive_mod(i + step, d.size)), 1, step});
  }
  d.reindex();
  return d;
}

// Loose ends produced by cutting the slotted strands.
constexpr std::int64_t near_end(int k) { return -(1 + k); }
constexpr std::int64_t far_end(int k) { return -(4 + k); }

struct Piece {
  std::int64_t a, b;
  std::int64_t lam, mu;  // as traversed a -> b
};

// Cut-and-rejoin at the three crossings center-1, center, center+1.  The
// attaching arc crosses the strands leaving those points eastward; the two
// parities are the two mirror-image non-crossing reconnections.
void apply_site(Diagram& d, std::int64_t center, int parity) {
  const std::int64_t size = d.size;
  std::int64_t slot_point[3];
  std::int64_t slot_germ[3];
  for (int k = 0; k < 3; ++k) {
    slot_point[k] = positive_mod(center - 1 + k, size);
    slot_germ[k] = east(slot_point[k]);
  }
  auto slot_of = [&](std::int64_t germ) {
    for (int k = 0; k < 3; ++k) {
      if (slot_germ[k] == germ) return k;
    }
    return -1;
  };

  std::vector<Piece> pieces;
  std::vector<std::int32_t> cut_ids;
  for (int k = 0; k < 3; ++k) {
    std::int32_t id = d.at[slot_germ[k]];
    if (std::find(cut_ids.begin(), cut_ids.end(), id) != cut_ids.end()) {
      continue;  // strand joining two slots, already cut
    }
    cut_ids.push_back(id);
    const Strand& s = d.strands[id];
    int ku = slot_of(s.u);
    int kv = slot_of(s.v);
    if (ku >= 0 && kv >= 0) {
      pieces.push_back({s.u, near_end(ku), 0, 0});
      pieces.push_back({s.v, near_end(kv), 0, 0});
      pieces.push_back({far_end(ku), far_end(kv), s.lam, s.mu});
    } else if (ku >= 0) {
      pieces.push_back({s.u, near_end(ku), 0, 0});
      pieces.push_back({far_end(ku), s.v, s.lam, s.mu});
    } else {
      pieces.push_back({s.v, near_end(kv), 0, 0});
      pieces.push_back({far_end(kv), s.u, -s.lam, -s.mu});
    }
  }

  // Junction data is the mu offset between slot ordinals (slot k sits at
  // height center-1+k); junctions cross the annulus zero times.
  if (parity == 0) {
    pieces.push_back({near_end(0), near_end(1), 0, 1});
    pieces.push_back({far_end(1), far_end(2), 0, 1});
    pieces.push_back({near_end(2), far_end(0), 0, -2});
  } else {
    pieces.push_back({near_end(1), near_end(2), 0, 1});
    pieces.push_back({far_end(0), far_end(1), 0, 1});
    pieces.push_back({near_end(0), far_end(2), 0, 2});
  }

  // Remove the cut strands, then stitch pieces germ-to-germ.
  std::sort(cut_ids.begin(), cut_ids.end(), std::greater<>());
  for (std::int32_t id : cut_ids) {
    d.strands.erase(d.strands.begin() + id);
  }

  std::map<std::int64_t, std::vector<std::size_t>> at_loose;
  std::vector<std::size_t> anchored;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].a < 0) at_loose[pieces[i].a].push_back(i);
    if (pieces[i].b < 0) at_loose[pieces[i].b].push_back(i);
    if (pieces[i].a >= 0 || pieces[i].b >= 0) anchored.push_back(i);
  }

  std::vector<std::uint8_t> used(pieces.size(), 0);
  for (std::size_t start : anchored) {
    if (used[start]) continue;
    std::int64_t from = pieces[start].a >= 0 ? pieces[start].a : pieces[start].b;
    std::int64_t lam = 0, mu = 0;
    std::int64_t end = from;
    std::size_t idx = start;
    for (;;) {
      used[idx] = 1;
      const Piece& pc = pieces[idx];
      std::int64_t other;
      if (pc.a == end) {
        other = pc.b;
        lam += pc.lam;
        mu += pc.mu;
      } else {
        other = pc.a;
        lam -= pc.lam;
        mu -= pc.mu;
      }
      if (other >= 0) {
        d.strands.push_back({from, other, lam, mu});
        break;
      }
      const auto& inc = at_loose[other];
      idx = inc[0] == idx ? inc[1] : inc[0];
      end = other;
    }
  }

  // Leftover cycles are closed curves missing every crossing point.
  // Nullhomotopic ones are isotopy debris and are dropped.  A cycle
  // wrapping the meridian once is a geometrically legitimate outcome that
  // this crossing-point representation cannot carry, so the attachment is
  // refused.  Anything else would be a non-primitive embedded curve:
  // impossible, hence an accounting failure worth shouting about.
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (used[i]) continue;
    std::int64_t lam = 0, mu = 0;
    std::size_t idx = i;
    std::int64_t end = pieces[i].a;
    do {
      used[idx] = 1;
      const Piece& pc = pieces[idx];
      std::int64_t other;
      if (pc.a == end) {
        other = pc.b;
        lam += pc.lam;
        mu += pc.mu;
      } else {
        other = pc.a;
        lam -= pc.lam;
        mu -= pc.mu;
      }
      const auto& inc = at_loose[other];
      idx = inc[0] == idx ? inc[1] : inc[0];
      end = other;
    } while (idx != i);
    if (lam == 0 && mu == 0) continue;
    if (lam == 0 && (mu == size || mu == -size)) {
      throw unsupported_error(
          "attach_bypass: the move pinches off a closed curve parallel to "
          "the cut meridian, which this representation cannot carry");
    }
    throw invariant_violation_error(
        "attach_bypass: surgery debris has impossible class");
  }

  d.reindex();
}

struct TraceData {
  std::vector<std::int64_t> point_component;
  std::vector<ComponentClass> classes;
  std::vector<std::int64_t> wraps;
};

ComponentClass canonical_class(std::int64_t lam_internal, std::int64_t mu) {
  // Internal lambda counts eastward passes; the declared orientation has
  // fresh curves winding -p along lambda while winding +q along mu.
  std::int64_t lam = -lam_internal;
  if (lam > 0 || (lam == 0 && mu < 0)) {
    lam = -lam;
    mu = -mu;
  }
  return {lam, mu};
}

TraceData trace_components(const Diagram& d) {
  TraceData out;
  out.point_component.assign(d.size, -1);
  out.wraps.assign(d.size, 0);
  for (std::int64_t start = 0; start < d.size; ++start) {
    if (out.point_component[start] != -1) continue;
    const std::int64_t id = static_cast<std::int64_t>(out.classes.size());
    std::int64_t lam = 0, mu = 0;
    out.point_component[start] = id;
    out.wraps[start] = 1;  // canonical traversal crosses the start eastward
    std::int64_t germ = east(start);
    for (;;) {
      const Strand& s = d.strands[d.at[germ]];
      std::int64_t other;
      if (s.u == germ) {
        other = s.v;
        lam += s.lam;
        mu += s.mu;
      } else {
        other = s.u;
        lam -= s.lam;
        mu -= s.mu;
      }
      std::int64_t pt = point_of(other);
      if (pt == start) {
        if (!is_west(other)) {
          throw invariant_violation_error(
              "trace: component closed against its own orientation");
        }
        break;
      }
      out.point_component[pt] = id;
      out.wraps[pt] = is_west(other) ? 1 : -1;
      germ = other ^ 1;  // cross the passage at pt
    }
    if (mu % d.size != 0) {
      throw invariant_violation_error(
          "trace: meridian displacement of a closed component is fractional");
    }
    out.classes.push_back(canonical_class(lam, mu / d.size));
  }
  return out;
}

}  // namespace

Multicurve::Multicurve(DividingSet base, std::vector<BypassSite> word)
    : base_(std::move(base)), word_(std::move(word)) {
  replay();
}

Multicurve Multicurve::build(const DividingSet& ds) {
  if (2 * ds.n * ds.slope.p > kMaxSize) {
    throw resource_limit_error("build_multicurve: size exceeds the guard");
  }
  Multicurve mc(ds, {});
  // The successor step 2n*e with e = q is pinned by requiring every fresh
  // component to report class (-p, q); trust the trace, not the formula.
  for (const auto& cls : mc.classes_) {
    if (cls.lambda != -ds.slope.p || cls.mu != ds.slope.q) {
      throw invariant_violation_error(
          "build_multicurve: fresh component class is not (-p, q)");
    }
  }
  if (mc.component_count() != 2 * ds.n) {
    throw invariant_violation_error(
        "build_multicurve: fresh component count is not 2n");
  }
  return mc;
}

Multicurve Multicurve::attach(const BypassSite& site) const {
  if (size_ < 3) {
    throw unsupported_error(
        "attach_bypass: needs at least three crossings (twisting number -1 "
        "disk has none)");
  }
  if (site.center < 0 || site.center >= size_) {
    throw std::domain_error("attach_bypass: center out of range");
  }
  // Only the center and the rejoining parity matter; store the canonical
  // representative so that equal attachments compare equal.
  BypassSite canonical{site.center, Side::exterior,
                       site_parity(site) == 0 ? Orientation::a
                                              : Orientation::b};
  std::vector<BypassSite> word = word_;
  word.push_back(canonical);

  // Cancel inverse pairs separated only by sites that commute with them.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < word.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < word.size(); ++j) {
        if (sites_commute(word[i], word[j], size_)) continue;
        if (sites_cancel(word[i], word[j])) {
          word.erase(word.begin() + j);
          word.erase(word.begin() + i);
          changed = true;
        }
        break;  // a non-commuting, non-cancelling site blocks the pair
      }
    }
  }

  // Canonical order: the least interleaving that respects the precedence
  // of non-commuting (overlapping) sites.  Greedy adjacent swaps are not
  // confluent here; pick greedily among the ready sites instead.
  std::vector<BypassSite> sorted;
  std::vector<char> used(word.size(), 0);
  sorted.reserve(word.size());
  while (sorted.size() < word.size()) {
    std::size_t best = word.size();
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (used[i]) continue;
      bool ready = true;
      for (std::size_t k = 0; k < i; ++k) {
        if (!used[k] && !sites_commute(word[k], word[i], size_)) ready = false;
      }
      if (!ready) continue;
      if (best == word.size() || site_order_before(word[i], word[best])) {
        best = i;
      }
    }
    used[best] = 1;
    sorted.push_back(word[best]);
  }
  return Multicurve(base_, std::move(sorted));
}

void Multicurve::replay() {
  Diagram d = fresh_diagram(base_);
  size_ = d.size;

  successor_.resize(size_);
  const std::int64_t step = 2 * base_.n * base_.slope.q;
  for (std::int64_t i = 0; i < size_; ++i) {
    successor_[i] = positive_mod(i + step, size_);
  }

  for (const BypassSite& site : word_) {
    apply_site(d, site.center, site_parity(site));
    // Formal layer: pre-compose one 3-cycle on the affected indices.
    // Parity 0 is the cycle center-1 -> center+1 -> center -> center-1.
    const std::int64_t a = positive_mod(site.center - 1, size_);
    const std::int64_t b = site.center;
    const std::int64_t c = positive_mod(site.center + 1, size_);
    std::vector<std::int64_t> next = successor_;
    if (site_parity(site) == 0) {
      next[a] = successor_[c];
      next[c] = successor_[b];
      next[b] = successor_[a];
    } else {
      next[a] = successor_[b];
      next[b] = successor_[c];
      next[c] = successor_[a];
    }
    successor_ = std::move(next);
  }

  TraceData data = trace_components(d);
  point_component_ = std::move(data.point_component);
  classes_ = std::move(data.classes);
  wraps_ = std::move(data.wraps);
}

ComponentClass Multicurve::component_class(std::int64_t id) const {
  if (id < 0 || id >= component_count()) {
    throw std::domain_error("component_class: unknown component id");
  }
  return classes_[id];
}

std::vector<std::int64_t> Multicurve::trivial_components() const {
  std::vector<std::int64_t> ids;
  for (std::int64_t id = 0; id < component_count(); ++id) {
    if (classes_[id].is_trivial()) ids.push_back(id);
  }
  return ids;
}

std::string Multicurve::serialize() const {
  std::ostringstream out;
  out << "multicurve v1\n";
  out << "base " << base_.n << ' ' << base_.slope.p << ' ' << base_.slope.q
      << '\n';
  out << "sites";
  for (const BypassSite& s : word_) {
    out << ' ' << s.center << ':' << (s.side == Side::exterior ? 'E' : 'I')
        << ':' << (s.orientation == Orientation::a ? 'a' : 'b');
  }
  out << '\n';
  out << "size " << size_ << '\n';
  out << "succ";
  for (std::int64_t v : successor_) out << ' ' << v;
  out << '\n';
  out << "wrap";
  for (std::int64_t v : wraps_) out << ' ' << v;
  out << '\n';
  return out.str();
}

Multicurve Multicurve::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "multicurve v1") {
    throw std::domain_error("multicurve parse: bad header");
  }
  std::int64_t n = 0, p = 0, q = 0;
  {
    std::string tag;
    if (!(in >> tag >> n >> p >> q) || tag != "base") {
      throw std::domain_error("multicurve parse: bad base line");
    }
  }
  std::getline(in, line);
  if (!std::getline(in, line) || line.rfind("sites", 0) != 0) {
    throw std::domain_error("multicurve parse: bad sites line");
  }
  std::vector<BypassSite> word;
  {
    std::istringstream sites(line.substr(5));
    std::string token;
    while (sites >> token) {
      std::int64_t center = 0;
      char colon1 = 0, side = 0, colon2 = 0, orient = 0;
      std::istringstream ts(token);
      if (!(ts >> center >> colon1 >> side >> colon2 >> orient) ||
          colon1 != ':' || colon2 != ':' || (side != 'E' && side != 'I') ||
          (orient != 'a' && orient != 'b')) {
        throw std::domain_error("multicurve parse: bad site token");
      }
      word.push_back({center, side == 'E' ? Side::exterior : Side::interior,
                      orient == 'a' ? Orientation::a : Orientation::b});
    }
  }
  Multicurve mc(DividingSet(n, ncf::Slope(p, q)), std::move(word));
  if (mc.serialize() != text) {
    throw std::domain_error(
        "multicurve parse: derived lines disagree with the stored state");
  }
  return mc;
}

BypassOutcome classify_outcome(const Multicurve& before,
                               const Multicurve& after) {
  auto parallel_class = [](const Multicurve& mc,
                           const char* role) -> ComponentClass {
    if (mc.component_count() == 0) {
      throw invariant_violation_error(std::string("classify_outcome: ") +
                                      role + " has no components");
    }
    ComponentClass cls = mc.component_class(0);
    for (std::int64_t id = 1; id < mc.component_count(); ++id) {
      if (!(mc.component_class(id) == cls)) {
        throw invariant_violation_error(
            std::string("classify_outcome: ") + role +
            " multicurve is not a parallel family; it matches none of the "
            "four bypass cases:\n" +
            mc.serialize());
      }
    }
    if (cls.is_trivial()) {
      throw invariant_violation_error(
          std::string("classify_outcome: ") + role +
          " multicurve has a homotopically trivial component; it matches "
          "none of the four bypass cases:\n" +
          mc.serialize());
    }
    return cls;
  };
  ComponentClass b = parallel_class(before, "before");
  ComponentClass a = parallel_class(after, "after");
  const std::int64_t delta = after.component_count() - before.component_count();
  if (delta == -2) return BypassOutcome::decrease_by_two;
  if (delta == 2) return BypassOutcome::increase_by_two;
  if (delta == 0) {
    return a == b ? BypassOutcome::trivial : BypassOutcome::dehn_twist;
  }
  throw invariant_violation_error(
      "classify_outcome: component count changed by " + std::to_string(delta) +
      ", matching none of the four bypass cases:\nbefore:\n" +
      before.serialize() + "after:\n" + after.serialize());
}

DividingSet as_dividing_set(const Multicurve& mc) {
  if (mc.component_count() % 2 != 0) {
    throw invariant_violation_error(
        "as_dividing_set: odd number of components");
  }
  ComponentClass cls = mc.component_class(0);
  for (std::int64_t id = 1; id < mc.component_count(); ++id) {
    if (!(mc.component_class(id) == cls)) {
      throw invariant_violation_error(
          "as_dividing_set: components are not parallel");
    }
  }
  if (cls.is_trivial()) {
    throw invariant_violation_error(
        "as_dividing_set: homotopically trivial components");
  }
  return normalize(mc.component_count() / 2, cls.lambda, cls.mu);
}

}  // namespace tightcount::torus
