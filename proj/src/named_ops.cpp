#include "spmodels/named_ops.hpp"

#include <algorithm>

namespace spm {

namespace {

void check_copy(const Universe& u, int a) {
  if (a < 1 || a > u.copies)
    throw InvalidInput("copy index " + std::to_string(a) + " out of range 1.." +
                       std::to_string(u.copies));
}

WeylOp mul(const Universe& u, const VarId& v) { return WeylOp::variable(u, v); }
WeylOp d(const Universe& u, const VarId& v) { return WeylOp::derivative(u, v); }

}  // namespace

WeylOp euler(const Universe& u, int a) {
  check_copy(u, a);
  WeylOp r(u);
  for (int i = 1; i <= u.n; ++i) {
    r += mul(u, VarId::x(a, i)) * d(u, VarId::x(a, i));
    r += mul(u, VarId::y(a, i)) * d(u, VarId::y(a, i));
  }
  return r;
}

WeylOp laplacian(const Universe& u, int a) {
  check_copy(u, a);
  WeylOp r(u);
  for (int i = 1; i <= u.n; ++i) {
    r += d(u, VarId::x(a, i)) * d(u, VarId::x(a, i));
    r += d(u, VarId::y(a, i)) * d(u, VarId::y(a, i));
  }
  return r;
}

WeylOp norm_squared(const Universe& u, int a) {
  check_copy(u, a);
  WeylOp r(u);
  for (int i = 1; i <= u.n; ++i) {
    r += mul(u, VarId::x(a, i)) * mul(u, VarId::x(a, i));
    r += mul(u, VarId::y(a, i)) * mul(u, VarId::y(a, i));
  }
  return r;
}

WeylOp orthogonal_euler(const Universe& u, int a) {
  check_copy(u, a);
  WeylOp r(u);
  for (int i = 1; i <= u.n; ++i) r += mul(u, VarId::x(a, i)) * d(u, VarId::x(a, i));
  return r;
}

WeylOp orthogonal_laplacian(const Universe& u, int a) {
  check_copy(u, a);
  WeylOp r(u);
  for (int i = 1; i <= u.n; ++i) r += d(u, VarId::x(a, i)) * d(u, VarId::x(a, i));
  return r;
}

WeylOp orthogonal_norm_squared(const Universe& u, int a) {
  check_copy(u, a);
  WeylOp r(u);
  for (int i = 1; i <= u.n; ++i) r += mul(u, VarId::x(a, i)) * mul(u, VarId::x(a, i));
  return r;
}

WeylOp symplectic_dirac(const Universe& u, int a) {
  check_copy(u, a);
  WeylOp r(u);
  for (int i = 1; i <= u.n; ++i) {
    r += mul(u, VarId::z(i)) * d(u, VarId::y(a, i));
    r -= d(u, VarId::x(a, i)) * d(u, VarId::z(i));
  }
  return r;
}

WeylOp symplectic_dirac_adjoint(const Universe& u, int a) {
  check_copy(u, a);
  WeylOp r(u);
  for (int i = 1; i <= u.n; ++i) {
    r += mul(u, VarId::x(a, i)) * mul(u, VarId::z(i));
    r += mul(u, VarId::y(a, i)) * d(u, VarId::z(i));
  }
  return r;
}

WeylOp symplectic_pairing_vars(const Universe& u, int a, int b) {
  check_copy(u, a);
  check_copy(u, b);
  WeylOp r(u);
  for (int i = 1; i <= u.n; ++i) {
    r += mul(u, VarId::x(a, i)) * mul(u, VarId::y(b, i));
    r -= mul(u, VarId::y(a, i)) * mul(u, VarId::x(b, i));
  }
  return r;
}

WeylOp symplectic_pairing_derivs(const Universe& u, int a, int b) {
  check_copy(u, a);
  check_copy(u, b);
  WeylOp r(u);
  for (int i = 1; i <= u.n; ++i) {
    r += d(u, VarId::x(a, i)) * d(u, VarId::y(b, i));
    r -= d(u, VarId::y(a, i)) * d(u, VarId::x(b, i));
  }
  return r;
}

WeylOp euclidean_var_deriv(const Universe& u, int a, int b) {
  check_copy(u, a);
  check_copy(u, b);
  WeylOp r(u);
  for (int i = 1; i <= u.n; ++i) {
    r += mul(u, VarId::x(a, i)) * d(u, VarId::x(b, i));
    r += mul(u, VarId::y(a, i)) * d(u, VarId::y(b, i));
  }
  return r;
}

WeylOp spinor_euler(const Universe& u) {
  WeylOp r(u);
  for (int i = 1; i <= u.n; ++i) r += mul(u, VarId::z(i)) * d(u, VarId::z(i));
  return r;
}

std::vector<std::string> named_operator_names() {
  return {"euler",       "laplacian",     "norm_squared",
          "orthogonal_euler", "orthogonal_laplacian", "orthogonal_norm_squared",
          "dirac",       "dirac_adjoint", "symplectic_pairing_vars",
          "symplectic_pairing_derivs", "euclidean_var_deriv", "spinor_euler",
          "identity"};
}

WeylOp build_named(const NamedOpRequest& req) {
  const Universe u{req.n, req.copies};
  u.validate();
  auto arity = [&](std::size_t k) {
    if (req.indices.size() != k)
      throw InvalidInput("operator '" + req.name + "' takes " + std::to_string(k) +
                         " copy indices, got " + std::to_string(req.indices.size()));
  };
  auto one = [&](WeylOp (*f)(const Universe&, int)) {
    arity(1);
    return f(u, req.indices[0]);
  };
  auto two = [&](WeylOp (*f)(const Universe&, int, int)) {
    arity(2);
    return f(u, req.indices[0], req.indices[1]);
  };
  const std::string& nm = req.name;
  if (nm == "euler") return one(euler);
  if (nm == "laplacian") return one(laplacian);
  if (nm == "norm_squared") return one(norm_squared);
  if (nm == "orthogonal_euler") return one(orthogonal_euler);
  if (nm == "orthogonal_laplacian") return one(orthogonal_laplacian);
  if (nm == "orthogonal_norm_squared") return one(orthogonal_norm_squared);
  if (nm == "dirac" || nm == "D_s") return one(symplectic_dirac);
  if (nm == "dirac_adjoint" || nm == "X_s") return one(symplectic_dirac_adjoint);
  if (nm == "symplectic_pairing_vars") return two(symplectic_pairing_vars);
  if (nm == "symplectic_pairing_derivs") return two(symplectic_pairing_derivs);
  if (nm == "euclidean_var_deriv") return two(euclidean_var_deriv);
  if (nm == "spinor_euler") {
    arity(0);
    return spinor_euler(u);
  }
  if (nm == "identity") {
    arity(0);
    return WeylOp::identity(u);
  }
  throw InvalidInput("unknown operator name '" + nm + "'");
}

std::string_view to_string(RootRole role) {
  switch (role) {
    case RootRole::Cartan: return "cartan";
    case RootRole::Positive: return "positive-root";
    case RootRole::Negative: return "negative-root";
  }
  return "";
}

std::vector<Generator> build_sp2n_realization(RealizationKind kind, int n, int copies) {
  const Universe u{n, copies};
  u.validate();
  const bool spinor = kind == RealizationKind::Spinor;
  const Rational half(1, 2);
  auto label = [](char c, int j, int k) {
    return std::string(1, c) + std::to_string(j) + std::to_string(k);
  };
  auto x = [&](int a, int i) { return mul(u, VarId::x(a, i)); };
  auto y = [&](int a, int i) { return mul(u, VarId::y(a, i)); };
  auto dx = [&](int a, int i) { return d(u, VarId::x(a, i)); };
  auto dy = [&](int a, int i) { return d(u, VarId::y(a, i)); };
  auto z = [&](int i) { return mul(u, VarId::z(i)); };
  auto dz = [&](int i) { return d(u, VarId::z(i)); };

  std::vector<Generator> out;
  // X_jk
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      WeylOp op(u);
      for (int a = 1; a <= copies; ++a) op += x(a, j) * dx(a, k) - y(a, k) * dy(a, j);
      if (spinor) {
        op -= z(k) * dz(j);
        if (j == k) op -= WeylOp::identity(u, half);
      }
      const RootRole role = j == k ? RootRole::Cartan : (j < k ? RootRole::Positive : RootRole::Negative);
      out.push_back({label('X', j, k), role, std::move(op)});
    }
  }
  // Y_jk, Z_jk for j <= k
  for (int j = 1; j <= n; ++j) {
    for (int k = j; k <= n; ++k) {
      WeylOp yop(u);
      WeylOp zop(u);
      for (int a = 1; a <= copies; ++a) {
        if (j == k) {
          yop += x(a, j) * dy(a, j);
          zop += y(a, j) * dx(a, j);
        } else {
          yop += x(a, j) * dy(a, k) + x(a, k) * dy(a, j);
          zop += y(a, j) * dx(a, k) + y(a, k) * dx(a, j);
        }
      }
      if (spinor) {
        if (j == k) {
          yop -= half * (dz(j) * dz(j));
          zop += half * (z(j) * z(j));
        } else {
          yop -= dz(j) * dz(k);
          zop += z(j) * z(k);
        }
      }
      out.push_back({label('Y', j, k), RootRole::Positive, std::move(yop)});
      out.push_back({label('Z', j, k), RootRole::Negative, std::move(zop)});
    }
  }
  return out;
}

}  // namespace spm
