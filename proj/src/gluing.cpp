#include "secdet/gluing.hpp"

#include <algorithm>

namespace secdet {

namespace {

ScalMat empty_center(size_t width, const FieldSpec& f) { return ScalMat(0, width, f); }

// rebuild the projected-coordinate chart of a class from its ambient lift
void refresh_projection(MatrixClass& c) {
  const RingPtr& amb = c.amb.ring();
  const FieldSpec f = amb->field();
  if (c.center.rows() == 0) {
    c.F = ScalMat::identity(amb->nvars(), f);
    c.rep = c.amb;
    return;
  }
  c.F = ScalMat::from_rows(c.center.kernel(), f);
  RingPtr target = PolyRing::make_indexed("x", c.F.rows(), f);
  ProjectionWitness pw{c.center, c.F, amb, target};
  LinearMatrix rep(target, c.amb.rows(), c.amb.cols());
  for (size_t i = 0; i < c.amb.rows(); i++)
    for (size_t j = 0; j < c.amb.cols(); j++) {
      auto p = pw.project_form(c.amb.at(i, j));
      if (!p)
        throw GlueError("lift", "an entry does not vanish on the projection center");
      rep.set(i, j, *p);
    }
  if (c.amb.symmetric()) rep.set_symmetric(true);
  c.rep = rep;
}

std::vector<std::vector<Scalar>> gamma_coords(const std::vector<Point>& pts) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& p : pts) out.push_back(p.coords);
  return out;
}

void check_two_minors_on_X(const LinearMatrix& M, const ParamVariety& V,
                           const std::string& stage) {
  if (std::min(M.rows(), M.cols()) < 2) return;
  for (const auto& m : minors(M, 2))
    if (!V.vanishes_on(m)) throw GlueError(stage, "a 2-minor does not vanish on X");
}

Scalar entry_eval(const LinearMatrix& M, size_t i, size_t j, const Point& p) {
  return M.at(i, j).eval(p.coords);
}

// gamma points away from the rows of `center`
std::vector<Point> gamma_off_center(const std::vector<Point>& gamma, const ScalMat& center) {
  std::vector<Point> out;
  for (const auto& p : gamma) {
    if (center.rows() == 0) {
      out.push_back(p);
      continue;
    }
    ScalMat stack = center.vstack(ScalMat::from_rows({p.coords}, center.field()));
    if (stack.rank() > center.rank()) out.push_back(p);
  }
  return out;
}

LinearMatrix block_diag_apply(const LinearMatrix& M, const ScalMat& G, const ScalMat& H,
                              size_t row_off, size_t col_off) {
  // apply G to rows [row_off..) and H^T to cols [col_off..), identity elsewhere
  const FieldSpec f = M.ring()->field();
  ScalMat A = ScalMat::identity(M.rows(), f);
  for (size_t i = 0; i < G.rows(); i++)
    for (size_t j = 0; j < G.cols(); j++) A.at(row_off + i, row_off + j) = G.at(i, j);
  ScalMat B = ScalMat::identity(M.cols(), f);
  for (size_t i = 0; i < H.rows(); i++)
    for (size_t j = 0; j < H.cols(); j++) B.at(col_off + i, col_off + j) = H.at(i, j);
  return M.apply(A, B);
}

LinearMatrix rows_cols(const LinearMatrix& M, size_t r0, size_t r1, size_t c0, size_t c1) {
  std::vector<size_t> rs, cs;
  for (size_t i = r0; i < r1; i++) rs.push_back(i);
  for (size_t j = c0; j < c1; j++) cs.push_back(j);
  return M.submatrix(rs, cs);
}

GLEquivalenceOptions plain_opts() { return {}; }
GLEquivalenceOptions congruence_opts() {
  GLEquivalenceOptions o;
  o.congruence = true;
  return o;
}

}  // namespace

MatrixClass ambient_class(const LinearMatrix& M, std::vector<Point> gamma) {
  MatrixClass c{M, empty_center(M.ring()->nvars(), M.ring()->field()), M,
                ScalMat::identity(M.ring()->nvars(), M.ring()->field()), std::move(gamma)};
  return c;
}

MatrixClass make_matrix_class(const LinearMatrix& amb, const ScalMat& center,
                              const std::vector<Point>& gamma) {
  MatrixClass c;
  c.amb = amb;
  c.center = center;
  c.gamma = gamma_off_center(gamma, center);
  refresh_projection(c);
  return c;
}

GlueContext make_glue_context_at(const ParamVariety& V, std::vector<Point> gamma,
                                 bool with_tangent_witnesses) {
  if (gamma.size() < 2) throw std::invalid_argument("gamma needs at least z and w");
  for (const auto& p : gamma)
    if (!p.param) throw std::invalid_argument("gamma points need parameter preimages");
  TangentSpace Tz = tangent_space(V, *gamma[0].param);
  TangentSpace Tw = tangent_space(V, *gamma[1].param);
  const FieldSpec f = V.param_ring()->field();
  auto span_of = [&](std::vector<std::vector<Scalar>> rows) {
    return ScalMat::from_rows(std::move(rows), f);
  };
  GlueContext ctx{&V,
                  gamma[0],
                  gamma[1],
                  gamma,
                  Tz,
                  Tw,
                  inner_projection(V, gamma[0]).second,
                  inner_projection(V, gamma[1]).second,
                  projection_from_span(V, span_of({gamma[0].coords, gamma[1].coords})).second,
                  std::nullopt,
                  std::nullopt,
                  std::nullopt};
  if (with_tangent_witnesses) {
    ctx.XTz = tangential_projection(V, Tz).second;
    ctx.XTw = tangential_projection(V, Tw).second;
    ctx.XTzTw =
        projection_from_span(V, Tz.spanning_rows.vstack(Tw.spanning_rows)).second;
  }
  return ctx;
}

GlueContext make_glue_context(const ParamVariety& V, size_t gamma_size, Rng& rng,
                              bool with_tangent_witnesses) {
  if (gamma_size < 2) throw std::invalid_argument("gamma needs at least z and w");
  return make_glue_context_at(V, sample_points(V, gamma_size, rng), with_tangent_witnesses);
}

namespace {

MatrixClass project_class(const MatrixClass& c, const ScalMat& extra_center,
                          const LinearMatrix& new_amb, const GlueContext& ctx) {
  MatrixClass out;
  out.amb = new_amb;
  out.center = c.center.rows() ? c.center.vstack(extra_center) : extra_center;
  out.gamma = gamma_off_center(ctx.gamma, out.center);
  refresh_projection(out);
  // regularity of the image is part of the contract
  if (!gamma_regular(out.amb, gamma_coords(out.gamma)))
    throw GlueError("regularity", "projected class lost Gamma-regularity");
  return out;
}

}  // namespace

MatrixClass induce_inner(const MatrixClass& c, const GlueContext& ctx, const Point& z, Rng& rng) {
  auto [wit, N] = normalize_at_point(c.amb, z.coords, &rng);
  LinearMatrix out = N.drop_col(0);
  ScalMat zc = ScalMat::from_rows({z.coords}, c.amb.ring()->field());
  return project_class(c, zc, out, ctx);
}

MatrixClass induce_inner_pi_t(const MatrixClass& c, const GlueContext& ctx, const Point& z,
                              Rng& rng) {
  auto [wit, N] = normalize_at_point(c.amb, z.coords, &rng);
  LinearMatrix out = N.drop_col(0).transpose();
  ScalMat zc = ScalMat::from_rows({z.coords}, c.amb.ring()->field());
  return project_class(c, zc, out, ctx);
}

MatrixClass induce_tangential(const MatrixClass& c, const GlueContext& ctx, const Point& z,
                              const TangentSpace& T, Rng& rng) {
  auto [wit, N] = normalize_at_point(c.amb, z.coords, &rng);
  LinearMatrix out = N.drop_row_col(0, 0);
  // surviving entries must vanish on the tangent space
  for (size_t i = 0; i < out.rows(); i++)
    for (size_t j = 0; j < out.cols(); j++)
      for (size_t r = 0; r < T.spanning_rows.rows(); r++)
        if (!out.at(i, j).eval(T.spanning_rows.row(r)).is_zero())
          throw GlueError("tangent_vanishing",
                          "partial_z output does not vanish on the tangent space");
  return project_class(c, T.spanning_rows, out, ctx);
}

namespace {

struct NormalizedSplit {
  LinearMatrix N;       // normalized matrix, N(z) = E^{0,0}
  LinearMatrix col0;    // first column as a rows x 1 matrix
  LinearMatrix rest;    // N without the first column
};

NormalizedSplit normalize_split(const LinearMatrix& M, const Point& z, Rng& rng) {
  auto [wit, N] = normalize_at_point(M, z.coords, &rng);
  std::vector<size_t> all_rows, col0{0};
  for (size_t i = 0; i < N.rows(); i++) all_rows.push_back(i);
  return {N, N.submatrix(all_rows, col0), N.drop_col(0)};
}

void battery(const LinearMatrix& M, const GlueContext& ctx, const std::string& stage) {
  check_two_minors_on_X(M, *ctx.V, stage);
  if (!is_one_generic(M).one_generic) throw GlueError(stage, "glued matrix is not 1-generic");
  if (!gamma_regular(M, gamma_coords(ctx.gamma)))
    throw GlueError(stage, "glued matrix is not Gamma-regular");
}

void require_recovery(const LinearMatrix& got, const LinearMatrix& want, Rng& rng,
                      const std::string& which) {
  Rng local = rng.fork();
  if (!gl_equivalent(got, want, local, plain_opts()))
    throw GlueError(which, "projection of the glued matrix does not recover the input class");
}

}  // namespace

MatrixClass glue_scroll_i(const MatrixClass& Mz, const MatrixClass& Mw, const GlueContext& ctx,
                          Rng& rng) {
  if (Mz.amb.rows() != Mw.amb.rows() || Mz.amb.cols() != Mw.amb.cols())
    throw GlueError("size", "input classes have mismatched sizes");
  const size_t cols = Mz.amb.cols();
  if (cols < Mz.amb.rows() + 1) throw GlueError("size", "p >= 3 is required");

  NormalizedSplit nz = normalize_split(Mz.amb, ctx.w, rng);  // (B | C)
  NormalizedSplit nw = normalize_split(Mw.amb, ctx.z, rng);  // (A | C')

  Rng r1 = rng.fork();
  auto wit = gl_equivalent(nw.rest, nz.rest, r1, plain_opts());
  if (!wit) throw GlueError("pipi", "doubly projected classes are not equivalent");
  // align M_w so the shared block is literally C
  LinearMatrix aligned =
      block_diag_apply(nw.N, wit->A, wit->B, 0, 1);
  // aligned = (G A | C) with G = wit->A

  LinearMatrix M(Mz.amb.ring(), Mz.amb.rows(), cols + 1);
  for (size_t i = 0; i < M.rows(); i++) {
    M.set(i, 0, aligned.at(i, 0));
    M.set(i, 1, nz.N.at(i, 0));
    for (size_t j = 1; j < cols; j++) M.set(i, j + 1, nz.N.at(i, j));
  }
  battery(M, ctx, "scroll_i");
  {
    auto [w1, n1] = normalize_at_point(M, ctx.z.coords, &rng);
    require_recovery(n1.drop_col(0), Mz.amb, rng, "recover_pi_z");
    auto [w2, n2] = normalize_at_point(M, ctx.w.coords, &rng);
    require_recovery(n2.drop_col(0), Mw.amb, rng, "recover_pi_w");
  }
  return ambient_class(M, ctx.gamma);
}

MatrixClass glue_scroll_ii(const MatrixClass& Mz, const MatrixClass& Mw, const MatrixClass& MTz,
                           const MatrixClass& MTw, const GlueContext& ctx, Rng& rng) {
  const size_t q = Mz.amb.rows() - 1;
  if (q < 2) throw GlueError("size", "q >= 2 is required");
  if (Mz.amb.cols() != q + 2 || MTz.amb.rows() != q || MTz.amb.cols() != q + 2)
    throw GlueError("size", "input classes have unexpected sizes");
  const FieldSpec f = Mz.amb.ring()->field();

  // normalize the tangential classes and align their partial blocks
  auto [witTz, NTz] = normalize_at_point(MTz.amb, ctx.w.coords, &rng);
  auto [witTw0, NTw0] = normalize_at_point(MTw.amb, ctx.z.coords, &rng);
  LinearMatrix Iz = rows_cols(NTz, 1, q, 1, q + 2);
  LinearMatrix Iw = rows_cols(NTw0, 1, q, 1, q + 2);
  Rng r1 = rng.fork();
  auto witI = gl_equivalent(Iw, Iz, r1, plain_opts());
  if (!witI) throw GlueError("dd", "partial-partial blocks are not equivalent");
  LinearMatrix NTw =
      block_diag_apply(NTw0, witI->A, witI->B, 1, 1);
  // NTw = [[*, C], [*, I]] with I shared

  // (dpi) for M_z against pi_{z}(M_Tw) = [[C],[I]]
  auto [witZ0, NZ0] = normalize_at_point(Mz.amb, ctx.w.coords, &rng);
  LinearMatrix target_a = rows_cols(NTw, 0, q, 1, q + 2);  // [[C],[I]]
  LinearMatrix dNZ = rows_cols(NZ0, 1, q + 1, 1, q + 2);
  Rng r2 = rng.fork();
  auto witA = gl_equivalent(dNZ, target_a, r2, plain_opts());
  if (!witA) throw GlueError("dpi_z", "partial of M_z does not match pi of M_Tw");
  LinearMatrix NZ =
      block_diag_apply(NZ0, witA->A, witA->B, 1, 1);
  // NZ = [[e, F], [b, C], [H', I]] after the row swap below
  // swap rows 0 and 1 so that the shared tails stack as C, F, I
  {
    ScalMat P = ScalMat::identity(q + 1, f);
    std::swap(P.at(0, 0), P.at(0, 1));
    std::swap(P.at(1, 1), P.at(1, 0));
    NZ = NZ.apply(P, ScalMat::identity(q + 2, f));
  }
  // now NZ = [[b, C], [e, F], [H, I]] with NZ(w) = E^{1,0}

  // (dpi) for M_w against pi_{w}(M_Tz) = [[F0],[I]]
  auto [witW0, NW0] = normalize_at_point(Mw.amb, ctx.z.coords, &rng);
  LinearMatrix target_b = rows_cols(NTz, 0, q, 1, q + 2);  // [[F0],[I]]
  LinearMatrix dNW = rows_cols(NW0, 1, q + 1, 1, q + 2);
  Rng r3 = rng.fork();
  auto witB = gl_equivalent(dNW, target_b, r3, plain_opts());
  if (!witB) throw GlueError("dpi_w", "partial of M_w does not match pi of M_Tz");
  LinearMatrix NW =
      block_diag_apply(NW0, witB->A, witB->B, 1, 1);
  // NW = [[c, C0], [d, F0], [G, I]]

  // LinCombi corrections: express C0 and F0 in terms of C, F and rows of I,
  // then change the top two rows of NW accordingly.
  auto tail = [&](const LinearMatrix& N, size_t row) {
    std::vector<Poly> t;
    for (size_t j = 1; j < N.cols(); j++) t.push_back(N.at(row, j));
    return t;
  };
  std::vector<Poly> Crow = tail(NZ, 0), Frow = tail(NZ, 1);
  // M' columns: C^T, F^T, I^T rows
  LinearMatrix Mp(Mz.amb.ring(), q + 1, q + 1);
  for (size_t i = 0; i < q + 1; i++) {
    Mp.set(i, 0, Crow[i]);
    Mp.set(i, 1, Frow[i]);
    for (size_t r = 0; r < q - 1; r++) Mp.set(i, 2 + r, NZ.at(2 + r, 1 + i));
  }
  auto depC = column_dependence(tail(NW, 0), Mp);
  auto depF = column_dependence(tail(NW, 1), Mp);
  if (!depC || !depF)
    throw GlueError("lincombi", "top rows of M_w are not combinations of the shared tails");
  ScalMat mix(2, 2, f);
  mix.at(0, 0) = (*depC)[0];
  mix.at(0, 1) = (*depC)[1];
  mix.at(1, 0) = (*depF)[0];
  mix.at(1, 1) = (*depF)[1];
  auto mix_inv = mix.inverse();
  if (!mix_inv) throw GlueError("lincombi", "degenerate C/F mixing matrix");
  // first remove the I-row contributions, then unmix the top two rows
  ScalMat R = ScalMat::identity(q + 1, f);
  for (size_t r = 0; r < q - 1; r++) {
    R.at(0, 2 + r) = -(*depC)[2 + r];
    R.at(1, 2 + r) = -(*depF)[2 + r];
  }
  ScalMat R2 = ScalMat::identity(q + 1, f);
  for (size_t i = 0; i < 2; i++)
    for (size_t j = 0; j < 2; j++) R2.at(i, j) = mix_inv->at(i, j);
  NW = NW.apply(R2 * R, ScalMat::identity(q + 2, f));
  // NW = [[c2, C], [d2, F], [G, I]]

  // assemble (A | B | C F I tails): col0 from NW, col1 from NZ, shared tails
  LinearMatrix M(Mz.amb.ring(), q + 1, q + 3);
  for (size_t i = 0; i <= q; i++) {
    M.set(i, 0, NW.at(i, 0));
    M.set(i, 1, NZ.at(i, 0));
    for (size_t j = 1; j <= q + 1; j++) M.set(i, j + 1, NZ.at(i, j));
  }
  battery(M, ctx, "scroll_ii");
  {
    auto [w1, n1] = normalize_at_point(M, ctx.z.coords, &rng);
    require_recovery(n1.drop_col(0), Mz.amb, rng, "recover_pi_z");
    auto [w2, n2] = normalize_at_point(M, ctx.w.coords, &rng);
    require_recovery(n2.drop_col(0), Mw.amb, rng, "recover_pi_w");
  }
  return ambient_class(M, ctx.gamma);
}

MatrixClass d_map(const MatrixClass& MTz, const MatrixClass& Mw, const GlueContext& ctx,
                  Rng& rng) {
  const size_t q = MTz.amb.rows() - 1;  // M_Tz in V_{q-1}: (q+1) x (q+1) symmetric
  if (!MTz.amb.symmetric()) throw GlueError("size", "D-map needs a symmetric tangential class");
  if (Mw.amb.rows() != q + 1 || Mw.amb.cols() != q + 2)
    throw GlueError("size", "D-map scroll input has unexpected size");

  auto [witT, NT] = normalize_at_point(MTz.amb, ctx.w.coords, &rng);
  // NT = [[d, E], [E^T, F]]
  auto [witW0, NW0] = normalize_at_point(Mw.amb, ctx.z.coords, &rng);
  LinearMatrix target = rows_cols(NT, 0, q + 1, 1, q + 1).transpose();  // (E^T | F)
  LinearMatrix dNW = rows_cols(NW0, 1, q + 1, 1, q + 2);
  Rng r1 = rng.fork();
  auto wit = gl_equivalent(dNW, target, r1, plain_opts());
  if (!wit) throw GlueError("dmap_square", "the fiber-product square does not commute");
  LinearMatrix NW =
      block_diag_apply(NW0, wit->A, wit->B, 1, 1);
  // NW = [[a, b, C], [col, E^T, F]]

  LinearMatrix out(Mw.amb.ring(), q + 1, q + 2);
  out.set(0, 0, NW.at(0, 1));        // b
  out.set(0, 1, NT.at(0, 0));        // d
  for (size_t j = 0; j < q; j++) out.set(0, 2 + j, NT.at(0, 1 + j));  // E
  for (size_t i = 0; i < q; i++) {
    out.set(1 + i, 0, NW.at(0, 2 + i));  // C^T
    out.set(1 + i, 1, NT.at(1 + i, 0));  // E^T
    for (size_t j = 0; j < q; j++) out.set(1 + i, 2 + j, NT.at(1 + i, 1 + j));  // F
  }
  check_two_minors_on_X(out, *ctx.V, "dmap");
  ScalMat zc = ScalMat::from_rows({ctx.z.coords}, Mw.amb.ring()->field());
  MatrixClass c;
  c.amb = out;
  c.center = zc;
  c.gamma = gamma_off_center(ctx.gamma, zc);
  refresh_projection(c);
  if (!gamma_regular(c.amb, gamma_coords(c.gamma)) ||
      !gamma_regular_transpose(c.amb, gamma_coords(c.gamma)))
    throw GlueError("regularity", "D-map image lost Gamma-regularity");
  return c;
}

MatrixClass glue_veronese(const MatrixClass& Mz, const MatrixClass& Mw, const MatrixClass& MTz,
                          const MatrixClass& MTw, const GlueContext& ctx, Rng& rng) {
  const size_t q = Mz.amb.rows() - 1;
  if (!MTz.amb.symmetric() || !MTw.amb.symmetric())
    throw GlueError("size", "tangential classes must be symmetric");
  if (Mz.amb.cols() != q + 2 || MTz.amb.rows() != q + 1)
    throw GlueError("size", "input classes have unexpected sizes");
  const FieldSpec f = Mz.amb.ring()->field();

  auto [witTz, NTz] = normalize_at_point(MTz.amb, ctx.w.coords, &rng);
  // NTz = [[d, E], [E^T, Fz]]
  auto [witTw, NTw0] = normalize_at_point(MTw.amb, ctx.z.coords, &rng);
  LinearMatrix Fz = rows_cols(NTz, 1, q + 1, 1, q + 1);
  Fz.set_symmetric(true);
  LinearMatrix Fw = rows_cols(NTw0, 1, q + 1, 1, q + 1);
  Fw.set_symmetric(true);
  Rng r1 = rng.fork();
  auto witF = gl_equivalent(Fw, Fz, r1, congruence_opts());
  if (!witF) throw GlueError("dd", "partial-partial blocks are not congruent");
  LinearMatrix NTw = block_diag_apply(NTw0, witF->A, witF->A, 1, 1);
  // NTw = [[a, C], [C^T, F]] with F shared

  // (dpiT) second equality: align M_w against pi^T_w(M_Tz) = (E^T | F)
  auto [witW0, NW0] = normalize_at_point(Mw.amb, ctx.z.coords, &rng);
  LinearMatrix tgt_b = rows_cols(NTz, 0, q + 1, 1, q + 1).transpose();
  LinearMatrix dNW = rows_cols(NW0, 1, q + 1, 1, q + 2);
  Rng r2 = rng.fork();
  auto witB = gl_equivalent(dNW, tgt_b, r2, plain_opts());
  if (!witB) throw GlueError("dpiT_w", "partial of M_w does not match pi^T of M_Tz");
  LinearMatrix NW =
      block_diag_apply(NW0, witB->A, witB->B, 1, 1);
  // NW = [[a_w, b0, C0], [col, E^T, F]]

  // (dpiT) first equality: partial of M_z against pi^T_z(M_Tw) = (C^T | F)
  auto [witZ0, NZ0] = normalize_at_point(Mz.amb, ctx.w.coords, &rng);
  LinearMatrix tgt_a = rows_cols(NTw, 0, q + 1, 1, q + 1).transpose();
  LinearMatrix dNZ = rows_cols(NZ0, 1, q + 1, 1, q + 2);
  Rng r3 = rng.fork();
  if (!gl_equivalent(dNZ, tgt_a, r3, plain_opts()))
    throw GlueError("dpiT_z", "partial of M_z does not match pi^T of M_Tw");

  // (D) conditions through the D-map representatives
  LinearMatrix Dz(Mz.amb.ring(), q + 1, q + 2);
  Dz.set(0, 0, NW.at(0, 1));
  Dz.set(0, 1, NTz.at(0, 0));
  for (size_t j = 0; j < q; j++) Dz.set(0, 2 + j, NTz.at(0, 1 + j));
  for (size_t i = 0; i < q; i++) {
    Dz.set(1 + i, 0, NW.at(0, 2 + i));
    Dz.set(1 + i, 1, NTz.at(1 + i, 0));
    for (size_t j = 0; j < q; j++) Dz.set(1 + i, 2 + j, NTz.at(1 + i, 1 + j));
  }
  {
    Rng r4 = rng.fork();
    if (!gl_equivalent(Dz, Mz.amb, r4, plain_opts()))
      throw GlueError("D_z", "D^z_w of (M_Tz, M_w) does not match M_z");
  }
  {
    // symmetric check D^w_z: rebuild from (M_Tw, M_z)
    auto [witZ1, NZ1] = normalize_at_point(Mz.amb, ctx.w.coords, &rng);
    Rng r5a = rng.fork();
    auto witAz = gl_equivalent(rows_cols(NZ1, 1, q + 1, 1, q + 2), tgt_a, r5a, plain_opts());
    if (!witAz) throw GlueError("D_w", "M_z cannot be aligned for D^w_z");
    LinearMatrix NZ =
        block_diag_apply(NZ1, witAz->A, witAz->B, 1, 1);
    LinearMatrix Dw(Mz.amb.ring(), q + 1, q + 2);
    Dw.set(0, 0, NZ.at(0, 1));
    Dw.set(0, 1, NTw.at(0, 0));
    for (size_t j = 0; j < q; j++) Dw.set(0, 2 + j, NTw.at(0, 1 + j));
    for (size_t i = 0; i < q; i++) {
      Dw.set(1 + i, 0, NZ.at(0, 2 + i));
      Dw.set(1 + i, 1, NTw.at(1 + i, 0));
      for (size_t j = 0; j < q; j++) Dw.set(1 + i, 2 + j, NTw.at(1 + i, 1 + j));
    }
    Rng r5 = rng.fork();
    if (!gl_equivalent(Dw, Mw.amb, r5, plain_opts()))
      throw GlueError("D_w", "D^w_z of (M_Tw, M_z) does not match M_w");
  }

  // LinCombi: replace C0 by C through the columns of (C^T | F)
  LinearMatrix Mp(Mz.amb.ring(), q, q + 1);
  for (size_t i = 0; i < q; i++) {
    Mp.set(i, 0, NTw.at(0, 1 + i));  // C^T
    for (size_t j = 0; j < q; j++) Mp.set(i, 1 + j, Fz.at(i, j));
  }
  std::vector<Poly> C0;
  for (size_t i = 0; i < q; i++) C0.push_back(NW.at(0, 2 + i));
  auto dep = column_dependence(C0, Mp);
  if (!dep || (*dep)[0].is_zero())
    throw GlueError("lincombi", "C0 is not a combination of C and the columns of F");
  Scalar alpha = (*dep)[0];
  // b = (b0 - sum dep[1+j] * E_j) / alpha
  Poly b = NW.at(0, 1);
  for (size_t j = 0; j < q; j++) b = b - NTz.at(0, 1 + j).scaled((*dep)[1 + j]);
  b = b.scaled(alpha.inv());

  // assemble the symmetric matrix [[a, b, C], [b, d, E], [C^T, E^T, F]]
  std::vector<Poly> entries;
  auto push = [&](const Poly& p) { entries.push_back(p); };
  push(NTw.at(0, 0));  // a
  push(b);
  for (size_t j = 0; j < q; j++) push(NTw.at(0, 1 + j));  // C
  push(b);
  push(NTz.at(0, 0));  // d
  for (size_t j = 0; j < q; j++) push(NTz.at(0, 1 + j));  // E
  for (size_t i = 0; i < q; i++) {
    push(NTw.at(1 + i, 0));  // C^T
    push(NTz.at(1 + i, 0));  // E^T
    for (size_t j = 0; j < q; j++) push(Fz.at(i, j));
  }
  LinearMatrix M =
      LinearMatrix::from_entries(Mz.amb.ring(), q + 2, q + 2, std::move(entries), true);

  battery(M, ctx, "veronese");
  {
    auto [w1, n1] = normalize_at_point(M, ctx.z.coords, &rng);
    require_recovery(n1.drop_col(0).transpose(), Mz.amb, rng, "recover_piT_z");
    auto [w2, n2] = normalize_at_point(M, ctx.w.coords, &rng);
    require_recovery(n2.drop_col(0).transpose(), Mw.amb, rng, "recover_piT_w");
    LinearMatrix dz = n1.drop_row_col(0, 0);
    LinearMatrix dw = n2.drop_row_col(0, 0);
    Rng r6 = rng.fork(), r7 = rng.fork();
    if (!gl_equivalent(dz, MTz.amb, r6, congruence_opts()))
      throw GlueError("recover_partial_z", "partial_z of M does not recover M_Tz");
    if (!gl_equivalent(dw, MTw.amb, r7, congruence_opts()))
      throw GlueError("recover_partial_w", "partial_w of M does not recover M_Tw");
  }
  return ambient_class(M, ctx.gamma);
}

// ---------- round trips and uniqueness ----------

GlueRoundTrip run_glue_roundtrip(const ParamVariety& V, const LinearMatrix& M, int q,
                                 GlueMode mode, Rng& rng, int resample_limit) {
  GlueRoundTrip out;
  const int e = int(M.cols()) - q;  // scroll sizes; for veronese e = 3
  size_t gamma_size =
      mode == GlueMode::Veronese ? size_t(q) + 2 : size_t(std::max(2, e + q - 1));
  for (int attempt = 0; attempt < resample_limit; attempt++) {
    out.resamples = attempt;
    try {
      GlueContext ctx = make_glue_context(V, gamma_size, rng, mode != GlueMode::ScrollI);
      MatrixClass top = ambient_class(M, ctx.gamma);
      MatrixClass glued = [&] {
        switch (mode) {
          case GlueMode::ScrollI: {
            MatrixClass mz = induce_inner(top, ctx, ctx.z, rng);
            MatrixClass mw = induce_inner(top, ctx, ctx.w, rng);
            return glue_scroll_i(mz, mw, ctx, rng);
          }
          case GlueMode::ScrollII: {
            MatrixClass mz = induce_inner(top, ctx, ctx.z, rng);
            MatrixClass mw = induce_inner(top, ctx, ctx.w, rng);
            MatrixClass mtz = induce_tangential(top, ctx, ctx.z, ctx.Tz, rng);
            MatrixClass mtw = induce_tangential(top, ctx, ctx.w, ctx.Tw, rng);
            return glue_scroll_ii(mz, mw, mtz, mtw, ctx, rng);
          }
          case GlueMode::Veronese: {
            MatrixClass mz = induce_inner_pi_t(top, ctx, ctx.z, rng);
            MatrixClass mw = induce_inner_pi_t(top, ctx, ctx.w, rng);
            MatrixClass mtz = induce_tangential(top, ctx, ctx.z, ctx.Tz, rng);
            MatrixClass mtw = induce_tangential(top, ctx, ctx.w, ctx.Tw, rng);
            return glue_veronese(mz, mw, mtz, mtw, ctx, rng);
          }
        }
        throw std::logic_error("unreachable");
      }();
      GLEquivalenceOptions eq;
      eq.congruence = (mode == GlueMode::Veronese);
      Rng r = rng.fork();
      auto wit = gl_equivalent(glued.amb, M, r, eq);
      out.conditions.push_back({"roundtrip_equivalence",
                                wit ? CheckStatus::Pass : CheckStatus::Fail, ""});
      out.ok = wit.has_value();
      out.glued = glued.amb;
      if (out.ok) return out;
    } catch (const GlueError& err) {
      out.conditions.push_back({err.condition, CheckStatus::Fail, err.what()});
    }
  }
  return out;
}

bool uniqueness_check(const ParamVariety& V, int q, PresentationKind kind, Rng& rng) {
  LinearMatrix direct = family_presentation(V);
  GLEquivalenceOptions eq;
  if (kind == PresentationKind::Veronese) {
    GlueRoundTrip rt = run_glue_roundtrip(V, direct, q, GlueMode::Veronese, rng);
    if (!rt.ok || !rt.glued) return false;
    eq.congruence = true;
    Rng r = rng.fork();
    return gl_equivalent(*rt.glued, direct, r, eq).has_value();
  }
  const int e = int(direct.cols()) - q;
  if (e >= 3) {
    GlueMode mode = (e == 3 && q >= 2) ? GlueMode::ScrollII : GlueMode::ScrollI;
    GlueRoundTrip rt = run_glue_roundtrip(V, direct, q, mode, rng);
    if (!rt.ok || !rt.glued) return false;
    Rng r = rng.fork();
    return gl_equivalent(*rt.glued, direct, r, eq).has_value();
  }
  // e = 2: derive the presentation again from the stored decomposition
  LinearMatrix again = family_presentation(V);
  Rng r = rng.fork();
  return gl_equivalent(again, direct, r, eq).has_value();
}

}  // namespace secdet
