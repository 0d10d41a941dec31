#include "newtonflow/transforms.hpp"

#include <stdexcept>

namespace newtonflow {

namespace {

// Pieces of a canonical measure in left-to-right order. An atom sitting at
// the right end of a segment sorts after it.
struct Piece {
  bool is_atom;
  double lo, hi;  // atom: lo == hi
  double mass;
};

std::vector<Piece> ordered_pieces(const Measure1D& mu) {
  std::vector<Piece> out;
  out.reserve(mu.piece_count());
  std::size_t ia = 0, is = 0;
  const auto& atoms = mu.atoms();
  const auto& segs = mu.segments();
  while (ia < atoms.size() || is < segs.size()) {
    bool take_atom;
    if (ia == atoms.size()) {
      take_atom = false;
    } else if (is == segs.size()) {
      take_atom = true;
    } else {
      take_atom = atoms[ia].position <= segs[is].left;
    }
    if (take_atom) {
      out.push_back({true, atoms[ia].position, atoms[ia].position, atoms[ia].mass});
      ++ia;
    } else {
      out.push_back({false, segs[is].left, segs[is].right, segs[is].mass});
      ++is;
    }
  }
  return out;
}

}  // namespace

PiecewiseLinear cdf_of(const Measure1D& mu) {
  std::vector<double> xs, vs;
  double c = 0.0;
  for (const Piece& p : ordered_pieces(mu)) {
    xs.push_back(p.lo);
    vs.push_back(c);
    c += p.mass;
    xs.push_back(p.hi);
    vs.push_back(c);
  }
  vs.back() = 1.0;
  return PiecewiseLinear(std::move(xs), std::move(vs), PLKind::cdf);
}

PiecewiseLinear quantile_of(const Measure1D& mu) {
  std::vector<double> ss, vs;
  double c = 0.0;
  for (const Piece& p : ordered_pieces(mu)) {
    ss.push_back(c);
    vs.push_back(p.lo);
    c += p.mass;
    ss.push_back(c);
    vs.push_back(p.hi);
  }
  ss.front() = 0.0;
  ss.back() = 1.0;
  return PiecewiseLinear(std::move(ss), std::move(vs), PLKind::quantile);
}

Measure1D measure_of(const PiecewiseLinear& f) {
  std::vector<Atom> atoms;
  std::vector<Segment> segments;
  const auto& xs = f.xs();
  const auto& vs = f.vs();

  if (f.kind() == PLKind::quantile) {
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      double ds = xs[i + 1] - xs[i];
      if (ds <= 0.0) continue;  // vertical piece: support gap
      if (vs[i + 1] == vs[i]) {
        atoms.push_back({vs[i], ds});
      } else {
        segments.push_back({vs[i], vs[i + 1], ds});
      }
    }
  } else if (f.kind() == PLKind::cdf) {
    if (!f.is_probability_cdf()) {
      throw std::invalid_argument("measure_of: cdf limits must be 0 and 1");
    }
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      double dv = vs[i + 1] - vs[i];
      if (dv <= 0.0) continue;  // flat piece carries no mass
      if (xs[i + 1] == xs[i]) {
        atoms.push_back({xs[i], dv});
      } else {
        segments.push_back({xs[i], xs[i + 1], dv});
      }
    }
  } else {
    throw std::invalid_argument("measure_of: expects a cdf or quantile");
  }
  return Measure1D(std::move(atoms), std::move(segments));
}

FlatDecomposition flat_decomposition(const PiecewiseLinear& quantile) {
  if (quantile.kind() != PLKind::quantile) {
    throw std::invalid_argument("flat_decomposition: expects a quantile");
  }
  FlatDecomposition out;
  const auto& ss = quantile.xs();
  const auto& vs = quantile.vs();
  for (std::size_t i = 0; i + 1 < ss.size(); ++i) {
    if (ss[i + 1] > ss[i] && vs[i + 1] == vs[i]) {
      if (!out.intervals.empty() && out.intervals.back().hi == ss[i] &&
          out.intervals.back().value == vs[i]) {
        out.intervals.back().hi = ss[i + 1];
      } else {
        out.intervals.push_back({ss[i], ss[i + 1], vs[i]});
      }
    }
  }
  return out;
}

}  // namespace newtonflow
