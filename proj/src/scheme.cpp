#include "ana/scheme.hpp"

#include "ana/rng.hpp"

namespace ana {

namespace {

std::uint64_t sessionGainAt(const AnaNetwork& net, const Gf& gf,
                            const KernelAssignment& asg, int slot, int j,
                            int i) {
  return channelGain(net.dag(), gf, asg, slot, net.sourceEdge(i),
                     net.destinationEdge(j));
}

Matrix columnVector(const std::vector<std::uint64_t>& v) {
  Matrix m(static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
  return m;
}

}  // namespace

SchemeInstance buildPrecoding(const AnaNetwork& net, const Gf& gf, int n,
                              const KernelAssignment& asg) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const int tau = 2 * n + 1;
  if (asg.slots() != tau) throw SlotMismatch();

  SchemeInstance inst{&net, gf, n, tau, asg, {}, {}};
  inst.V = {Matrix(tau, n + 1), Matrix(tau, n), Matrix(tau, n)};

  for (int t = 0; t < tau; ++t) {
    auto m = [&](int j, int i) { return sessionGainAt(net, gf, asg, t, j, i); };
    const std::uint64_t alpha = gf.mul(gf.mul(m(2, 0), m(1, 2)), m(0, 1));
    const std::uint64_t beta = gf.mul(gf.mul(m(1, 0), m(2, 1)), m(0, 2));
    auto mix = [&](int k) {  // beta^(n-k) * alpha^k
      return gf.mul(gf.pow(beta, n - k), gf.pow(alpha, k));
    };
    const std::uint64_t pre1 = gf.mul(m(2, 1), m(1, 2));
    for (int k = 0; k <= n; ++k) inst.V[0].at(t, k) = gf.mul(pre1, mix(k));
    const std::uint64_t pre2 = gf.mul(m(2, 0), m(1, 2));
    for (int k = 0; k < n; ++k) inst.V[1].at(t, k) = gf.mul(pre2, mix(k));
    const std::uint64_t pre3 = gf.mul(m(1, 0), m(2, 1));
    for (int k = 1; k <= n; ++k)
      inst.V[2].at(t, k - 1) = gf.mul(pre3, mix(k));
  }

  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i)
      inst.M[j][i] = blockDiagGain(net.dag(), gf, asg, net.sourceEdge(i),
                                   net.destinationEdge(j));
  return inst;
}

AlignmentReport checkAlignment(const SchemeInstance& inst) {
  const Gf& gf = inst.gf;
  AlignmentReport rep;

  Matrix m13v3 = matMul(gf, inst.M[0][2], inst.V[2]);
  Matrix m12v2 = matMul(gf, inst.M[0][1], inst.V[1]);
  int ra = rank(gf, m13v3), rb = rank(gf, m12v2);
  rep.c1 = ra == rb && rank(gf, hcat(m13v3, m12v2)) == ra;

  Matrix m23v3 = matMul(gf, inst.M[1][2], inst.V[2]);
  Matrix m21v1 = matMul(gf, inst.M[1][0], inst.V[0]);
  rep.c3 = rank(gf, hcat(m23v3, m21v1)) == rank(gf, m21v1);

  Matrix m32v2 = matMul(gf, inst.M[2][1], inst.V[1]);
  Matrix m31v1 = matMul(gf, inst.M[2][0], inst.V[0]);
  rep.c5 = rank(gf, hcat(m32v2, m31v1)) == rank(gf, m31v1);

  rep.rank_s[0] =
      rank(gf, hcat(matMul(gf, inst.M[0][0], inst.V[0]), m12v2));
  rep.rank_s[1] =
      rank(gf, hcat(matMul(gf, inst.M[1][1], inst.V[1]), m21v1));
  rep.rank_s[2] =
      rank(gf, hcat(matMul(gf, inst.M[2][2], inst.V[2]), m31v1));
  return rep;
}

std::vector<GainExpr> buildHSets(const AnaNetwork& net, int n,
                                 HSetVariant variant) {
  (void)net;
  std::vector<GainExpr> out;
  auto push = [&](std::initializer_list<std::pair<int, int>> gains, int bpow,
                  int apow) {
    GainExpr e;
    for (auto [j, i] : gains) e.gain(j, i);
    e.beta(bpow).alpha(apow);
    out.push_back(e);
  };
  switch (variant) {
    case HSetVariant::H1:
      for (int k = 0; k <= n; ++k)
        push({{0, 0}, {2, 1}, {1, 2}}, n - k, k);
      for (int k = 0; k < n; ++k)
        push({{0, 1}, {2, 0}, {1, 2}}, n - k, k);
      break;
    case HSetVariant::H2:
      for (int k = 0; k < n; ++k)
        push({{1, 1}, {2, 0}, {1, 2}}, n - k, k);
      for (int k = 0; k <= n; ++k)
        push({{1, 0}, {2, 1}, {1, 2}}, n - k, k);
      break;
    case HSetVariant::H3:
      for (int k = 1; k <= n; ++k)
        push({{2, 2}, {1, 0}, {2, 1}}, n - k, k);
      for (int k = 0; k <= n; ++k)
        push({{2, 0}, {2, 1}, {1, 2}}, n - k, k);
      break;
    case HSetVariant::H1Tilde:
      // roles of alpha and beta swap along with the session swap
      for (int k = 0; k < n; ++k)
        push({{0, 0}, {2, 1}, {0, 2}}, k, n - k);
      for (int k = 0; k <= n; ++k)
        push({{0, 1}, {2, 0}, {0, 2}}, k, n - k);
      break;
  }
  return out;
}

DecodeReport buildDecoders(const SchemeInstance& inst) {
  const Gf& gf = inst.gf;
  DecodeReport rep;
  const std::array<int, 3> partner = {1, 0, 0};  // interference block source
  std::array<Matrix, 3> S;
  for (int j = 0; j < 3; ++j) {
    Matrix own = matMul(gf, inst.M[j][j], inst.V[j]);
    Matrix other = matMul(gf, inst.M[j][partner[j]], inst.V[partner[j]]);
    S[j] = hcat(own, other);
    Matrix full;
    try {
      full = invert(gf, S[j]);
    } catch (const SingularMatrix&) {
      throw RankDeficient(j);
    }
    const int lj = inst.messageLength(j);
    rep.U[j] = Matrix(lj, inst.tau);
    for (int r = 0; r < lj; ++r)
      for (int c = 0; c < inst.tau; ++c) rep.U[j].at(r, c) = full.at(r, c);
  }

  rep.desired_identity = true;
  rep.interference_zero = true;
  for (int j = 0; j < 3; ++j) {
    Matrix own = matMul(gf, rep.U[j], matMul(gf, inst.M[j][j], inst.V[j]));
    if (!(own == Matrix::identity(inst.messageLength(j))))
      rep.desired_identity = false;
    for (int i = 0; i < 3; ++i) {
      if (i == j) continue;
      Matrix cross =
          matMul(gf, rep.U[j], matMul(gf, inst.M[j][i], inst.V[i]));
      if (!cross.isZero()) rep.interference_zero = false;
    }
  }
  rep.success = rep.desired_identity && rep.interference_zero;
  return rep;
}

std::array<std::vector<std::uint64_t>, 3> randomMessages(const Gf& gf, int n,
                                                         std::uint64_t seed) {
  std::array<std::vector<std::uint64_t>, 3> z;
  for (int i = 0; i < 3; ++i)
    z[i] = sampleUniform(gf, deriveSeed(seed, 7000 + i),
                         static_cast<size_t>(i == 0 ? n + 1 : n));
  return z;
}

DecodeReport simulateEndToEnd(
    const AnaNetwork& net, const Gf& gf, int n, std::uint64_t seed,
    const std::array<std::vector<std::uint64_t>, 3>& messages, int retries) {
  for (int i = 0; i < 3; ++i)
    if (static_cast<int>(messages[i].size()) != (i == 0 ? n + 1 : n))
      throw std::invalid_argument("message lengths must be (n+1, n, n)");

  int attempt = 0;
  while (true) {
    auto asg = KernelAssignment::random(net.dag(), 2 * n + 1, gf,
                                        deriveSeed(seed, 8000 + attempt));
    SchemeInstance inst = buildPrecoding(net, gf, n, asg);
    DecodeReport rep;
    try {
      rep = buildDecoders(inst);
    } catch (const RankDeficient&) {
      if (attempt >= retries) throw;
      ++attempt;
      continue;
    }
    rep.retries_used = attempt;
    rep.sent = messages;

    for (int j = 0; j < 3; ++j) {
      Matrix received(inst.tau, 1);
      for (int i = 0; i < 3; ++i) {
        Matrix contrib = matMul(gf, inst.M[j][i],
                                matMul(gf, inst.V[i], columnVector(messages[i])));
        for (int t = 0; t < inst.tau; ++t)
          received.at(t, 0) = gf.add(received.at(t, 0), contrib.at(t, 0));
      }
      Matrix decoded = matMul(gf, rep.U[j], received);
      rep.recovered[j].resize(inst.messageLength(j));
      for (int k = 0; k < inst.messageLength(j); ++k)
        rep.recovered[j][k] = decoded.at(k, 0);
      if (rep.recovered[j] != messages[j]) rep.success = false;
    }
    return rep;
  }
}

}  // namespace ana
