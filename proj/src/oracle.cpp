#include "oracle.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace hfl {

namespace {

struct Vertex {
  LatticePoint pos;
  std::int64_t h;
  std::int64_t cube;  // inner + outer offsets
};

struct Edge {
  int from, to;
  std::int64_t upower;
};

ModelComplex assemble(const std::vector<Vertex>& vertices, const std::vector<Edge>& edges,
                      std::int64_t N) {
  ModelComplex c;
  c.truncation = N;
  for (const auto& v : vertices) c.max_h = std::max(c.max_h, v.h);
  if (N < c.max_h + 4)
    fail(Err::TruncationTooSmall, "truncation " + std::to_string(N) + " below max h + 4 = " +
                                      std::to_string(c.max_h + 4));

  const std::int64_t nv = static_cast<std::int64_t>(vertices.size());
  auto index = [N](std::int64_t vertex, std::int64_t k) {
    return static_cast<std::size_t>(vertex * N + k);
  };
  c.basis.resize(static_cast<std::size_t>(nv * N));
  c.boundary.assign(static_cast<std::size_t>(nv * N), {});
  for (std::int64_t v = 0; v < nv; ++v)
    for (std::int64_t k = 0; k < N; ++k)
      c.basis[index(v, k)] = {static_cast<int>(v), k, -2 * vertices[static_cast<std::size_t>(v)].h - 2 * k +
                                                          vertices[static_cast<std::size_t>(v)].cube};
  for (const auto& e : edges) {
    if (e.upower < 0) fail(Err::Internal, "negative U-power on a cone edge");
    for (std::int64_t k = 0; k + e.upower < N; ++k)
      c.boundary[index(e.from, k)].push_back(index(e.to, k + e.upower));
  }
  for (auto& targets : c.boundary) std::sort(targets.begin(), targets.end());

  // boundary decreases the grading by exactly 1 and squares to zero
  for (std::size_t i = 0; i < c.basis.size(); ++i) {
    std::map<std::size_t, int> second;
    for (std::size_t t : c.boundary[i]) {
      if (c.basis[t].grading != c.basis[i].grading - 1)
        fail(Err::Internal, "cone edge does not decrease the total grading by 1");
      for (std::size_t u : c.boundary[t]) second[u] ^= 1;
    }
    for (const auto& [u, parity] : second)
      if (parity) fail(Err::Internal, "cone differential does not square to zero");
  }
  return c;
}

// Corners of the square with upper-right lattice point p, in the order
// ur, ul, lr, ll with inner cube offsets 0, 1, 1, 2.
std::array<std::pair<LatticePoint, std::int64_t>, 4> square_corners(LatticePoint p) {
  const HalfInt one = HalfInt::whole(1);
  return {{{p, 0},
           {{p.s1 - one, p.s2}, 1},
           {{p.s1, p.s2 - one}, 1},
           {{p.s1 - one, p.s2 - one}, 2}}};
}

}  // namespace

ModelComplex build_minus_model(const HSource& h, LatticePoint p, std::int64_t N) {
  h.check_parity(p);
  std::vector<Vertex> vertices;
  for (const auto& [pos, cube] : square_corners(p)) vertices.push_back({pos, h.at(pos), cube});
  auto delta = [&vertices](int from, int to) {
    return vertices[static_cast<std::size_t>(from)].h - vertices[static_cast<std::size_t>(to)].h;
  };
  // ll -> ul, ll -> lr, ul -> ur, lr -> ur (i = i2 - i1 over GF(2))
  std::vector<Edge> edges{{3, 1, delta(3, 1)}, {3, 2, delta(3, 2)}, {1, 0, delta(1, 0)}, {2, 0, delta(2, 0)}};
  return assemble(vertices, edges, N);
}

ModelComplex build_hat_model(const HSource& h, LatticePoint p, std::int64_t N) {
  h.check_parity(p);
  const HalfInt one = HalfInt::whole(1);
  // Squares in corner order (1,1), (0,1), (1,0), (0,0) with outer cube
  // offsets -2, -1, -1, 0.
  const std::array<LatticePoint, 4> ur_corners = {{{p.s1 + one, p.s2 + one},
                                                   {p.s1, p.s2 + one},
                                                   {p.s1 + one, p.s2},
                                                   p}};
  const std::array<std::int64_t, 4> outer = {-2, -1, -1, 0};

  std::vector<Vertex> vertices;
  for (int sq = 0; sq < 4; ++sq)
    for (const auto& [pos, inner] : square_corners(ur_corners[static_cast<std::size_t>(sq)]))
      vertices.push_back({pos, h.at(pos), inner + outer[static_cast<std::size_t>(sq)]});

  auto vid = [](int sq, int corner) { return 4 * sq + corner; };
  std::vector<Edge> edges;
  auto inner_delta = [&vertices](int from, int to) {
    return vertices[static_cast<std::size_t>(from)].h - vertices[static_cast<std::size_t>(to)].h;
  };
  for (int sq = 0; sq < 4; ++sq) {
    int ur = vid(sq, 0), ul = vid(sq, 1), lr = vid(sq, 2), ll = vid(sq, 3);
    edges.push_back({ll, ul, inner_delta(ll, ul)});
    edges.push_back({ll, lr, inner_delta(ll, lr)});
    edges.push_back({ul, ur, inner_delta(ul, ur)});
    edges.push_back({lr, ur, inner_delta(lr, ur)});
  }
  // Outer maps act vertexwise: U_i sends the tower at w to the tower at
  // w - e_i with power 1 - (h(w - e_i) - h(w)).
  auto outer_edges = [&](int sq_from, int sq_to) {
    for (int corner = 0; corner < 4; ++corner) {
      const Vertex& from = vertices[static_cast<std::size_t>(vid(sq_from, corner))];
      const Vertex& to = vertices[static_cast<std::size_t>(vid(sq_to, corner))];
      edges.push_back({vid(sq_from, corner), vid(sq_to, corner), 1 - (to.h - from.h)});
    }
  };
  outer_edges(0, 1);  // U1: (1,1) -> (0,1)
  outer_edges(2, 3);  // U1: (1,0) -> (0,0)
  outer_edges(0, 2);  // U2: (1,1) -> (1,0)
  outer_edges(1, 3);  // U2: (0,1) -> (0,0)
  return assemble(vertices, edges, N);
}

GradedDim graded_homology(const ModelComplex& c) {
  // Group generators by grading; the boundary maps grading g to g - 1, so
  // homology splits into small blocks eliminated independently.
  std::map<std::int64_t, std::vector<std::size_t>> by_grading;
  for (std::size_t i = 0; i < c.basis.size(); ++i) by_grading[c.basis[i].grading].push_back(i);

  std::map<std::int64_t, std::size_t> rank_at;  // rank of boundary leaving grading g
  for (const auto& [g, cols] : by_grading) {
    auto rows_it = by_grading.find(g - 1);
    if (rows_it == by_grading.end()) continue;
    const auto& rows = rows_it->second;
    std::map<std::size_t, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
    // Dense bit rows over the column space, eliminated with column pivoting
    // in grading-sorted order.
    std::vector<std::vector<std::uint64_t>> mtx(rows.size());
    std::size_t words = (cols.size() + 63) / 64;
    for (auto& r : mtx) r.assign(words, 0);
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t t : c.boundary[cols[j]])
        mtx[row_index.at(t)][j / 64] ^= (std::uint64_t{1} << (j % 64));
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols.size() && rank < rows.size(); ++j) {
      std::size_t pivot = rank;
      while (pivot < mtx.size() && !((mtx[pivot][j / 64] >> (j % 64)) & 1)) ++pivot;
      if (pivot == mtx.size()) continue;
      std::swap(mtx[rank], mtx[pivot]);
      for (std::size_t r = 0; r < mtx.size(); ++r) {
        if (r != rank && ((mtx[r][j / 64] >> (j % 64)) & 1))
          for (std::size_t w = 0; w < words; ++w) mtx[r][w] ^= mtx[rank][w];
      }
      ++rank;
    }
    rank_at[g] = rank;
  }

  GradedDim out;
  const std::int64_t cutoff = c.report_cutoff();
  for (const auto& [g, ids] : by_grading) {
    if (g <= cutoff) continue;
    auto rk = [&rank_at](std::int64_t gg) {
      auto it = rank_at.find(gg);
      return it == rank_at.end() ? std::size_t{0} : it->second;
    };
    std::int64_t dim = static_cast<std::int64_t>(ids.size()) - static_cast<std::int64_t>(rk(g)) -
                       static_cast<std::int64_t>(rk(g + 1));
    if (dim < 0) fail(Err::Internal, "negative homology dimension in the cone model");
    if (dim > 0) out.add(g, dim);
  }
  return out;
}

}  // namespace hfl
