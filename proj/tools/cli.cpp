#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wedgemap/adjoint.hpp"
#include "wedgemap/binforms.hpp"
#include "wedgemap/cubes.hpp"
#include "wedgemap/errors.hpp"
#include "wedgemap/exterior.hpp"
#include "wedgemap/intlin.hpp"
#include "wedgemap/inversion.hpp"
#include "wedgemap/io.hpp"

namespace wedgemap::cli {

namespace {

using nlohmann::json;

struct Context {
  std::istream& in;
  std::ostream& out;
  bool json_output = false;
};

template <typename F>
auto with_input(Context& ctx, const std::string& path, F&& read) {
  if (path == "-") return read(ctx.in);
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  return read(f);
}

std::vector<Integer> parse_integers(const std::vector<std::string>& toks, std::size_t expected,
                                    const char* what) {
  if (toks.size() != expected)
    throw InputError(std::string(what) + " expects " + std::to_string(expected) + " integers, got " +
                     std::to_string(toks.size()));
  std::vector<Integer> v;
  for (const auto& t : toks) v.push_back(io::parse_integer(t));
  return v;
}

BhargavaCube cube_from(const std::vector<Integer>& v, std::size_t offset) {
  BhargavaCube c;
  for (std::size_t i = 0; i < 4; ++i) {
    c.x[i] = v[offset + i];
    c.y[i] = v[offset + 4 + i];
  }
  return c;
}

void emit(Context& ctx, const json& j, const std::string& text) {
  if (ctx.json_output)
    ctx.out << j.dump() << '\n';
  else
    ctx.out << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact wedge-map inversion and composition of binary quadratic forms"};
  app.require_subcommand(1);
  Context ctx{in, out};
  app.add_flag("--json", ctx.json_output, "Emit JSON (integers as decimal strings)");

  std::string file_a, file_b;
  std::vector<std::string> ints;
  bool raw = false, reduced = false;
  int grade = 0;

  auto* c_wedge = app.add_subcommand("wedge", "Plücker coordinates of the columns of a matrix");
  c_wedge->add_option("matrix", file_a, "Matrix file ('-' for stdin)")->required();
  auto* c_invert = app.add_subcommand("invert", "Find vectors whose wedge is the given vector");
  c_invert->add_option("plucker", file_a, "Plücker file ('-' for stdin)")->required();
  auto* c_dual = app.add_subcommand("dual", "Duality (hat) map");
  c_dual->add_option("plucker", file_a)->required();
  auto* c_check = app.add_subcommand("check", "List violated grade-2 Plücker relations");
  c_check->add_option("plucker", file_a)->required();
  auto* c_hnf = app.add_subcommand("hnf", "Column Hermite normal form H = A U");
  c_hnf->add_option("matrix", file_a)->required();
  auto* c_kernel = app.add_subcommand("kernel", "Integer kernel basis");
  c_kernel->add_option("matrix", file_a)->required();
  auto* c_compose = app.add_subcommand("compose", "Compose two binary quadratic forms");
  c_compose->add_option("coeffs", ints, "a2 b2 c2 a3 b3 c3")->required();
  auto* raw_flag = c_compose->add_flag("--raw", raw, "Print the composed form unreduced");
  c_compose->add_flag("--reduced", reduced, "Reduce the result (positive definite only)")
      ->excludes(raw_flag);
  auto* c_build = app.add_subcommand("cube-build", "Cube realizing two forms");
  c_build->add_option("coeffs", ints, "a2 b2 c2 a3 b3 c3")->required();
  auto* c_forms = app.add_subcommand("cube-forms", "The three forms of a cube");
  c_forms->add_option("entries", ints, "x1 x2 x3 x4 y1 y2 y3 y4")->required();
  auto* c_ccompose = app.add_subcommand("cube-compose", "Compose two projective cubes");
  c_ccompose->add_option("entries", ints, "two cubes, 16 integers")->required();
  auto* c_adjoint = app.add_subcommand("adjoint", "k-adjoint (matrix of k x k minors)");
  c_adjoint->add_option("--k", grade, "Grade k")->required();
  c_adjoint->add_option("matrix", file_a)->required();
  auto* c_transition = app.add_subcommand("transition", "H with A H = E and det H = t");
  c_transition->add_option("A", file_a)->required();
  c_transition->add_option("E", file_b)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return 1;
  }

  auto read_matrix = [&](const std::string& p) {
    return with_input(ctx, p, [](std::istream& s) { return io::read_matrix(s); });
  };
  auto read_plucker = [&](const std::string& p) {
    return with_input(ctx, p, [](std::istream& s) { return io::read_plucker(s); });
  };

  try {
    if (c_wedge->parsed()) {
      PluckerVector y = wedge(read_matrix(file_a));
      emit(ctx, io::to_json(y), io::format_plucker(y));
    } else if (c_invert->parsed()) {
      IntMatrix x = invert(read_plucker(file_a));
      emit(ctx, io::to_json(x), io::format_matrix(x));
    } else if (c_dual->parsed()) {
      PluckerVector y = hat(read_plucker(file_a));
      emit(ctx, io::to_json(y), io::format_plucker(y));
    } else if (c_check->parsed()) {
      auto violations = plucker_check(read_plucker(file_a));
      json j = json::array();
      std::ostringstream text;
      for (const auto& v : violations) {
        j.push_back({{"quadruple", v.quadruple}, {"residue", io::to_json(v.residue)}});
        text << v.quadruple[0] << ' ' << v.quadruple[1] << ' ' << v.quadruple[2] << ' '
             << v.quadruple[3] << ' ' << v.residue << '\n';
      }
      emit(ctx, json{{"violations", j}}, text.str());
      if (!violations.empty()) {
        err << "error: " << reason_tag(Reason::RelationViolation) << ": "
            << violations.size() << " relation(s) violated\n";
        return 2;
      }
    } else if (c_hnf->parsed()) {
      HermiteForm h = hnf(read_matrix(file_a));
      emit(ctx, json{{"H", io::to_json(h.H)}, {"U", io::to_json(h.U)}, {"rank", h.rank}},
           io::format_matrix(h.H) + "\n" + io::format_matrix(h.U));
    } else if (c_kernel->parsed()) {
      IntMatrix k = kernel_basis(read_matrix(file_a));
      emit(ctx, io::to_json(k), io::format_matrix(k));
    } else if (c_compose->parsed()) {
      auto v = parse_integers(ints, 6, "compose");
      BinaryQuadraticForm q2{v[0], v[1], v[2]}, q3{v[3], v[4], v[5]};
      BinaryQuadraticForm r = compose_arndt(q2, q3).form;
      const bool definite = disc(r) < 0 && r.a > 0;
      if (reduced && !definite)
        throw MathError(Reason::NotDefinite, "--reduced needs a positive definite result");
      if (!raw && definite) r = reduce_definite(r).form;
      json j = io::to_json(r);
      j["disc"] = io::to_json(disc(r));
      emit(ctx, j, io::format_form(r));
    } else if (c_build->parsed()) {
      auto v = parse_integers(ints, 6, "cube-build");
      BhargavaCube c = build_cube({v[0], v[1], v[2]}, {v[3], v[4], v[5]});
      emit(ctx, io::to_json(c), io::format_cube(c));
    } else if (c_forms->parsed()) {
      BhargavaCube c = cube_from(parse_integers(ints, 8, "cube-forms"), 0);
      json forms = json::array();
      std::string text;
      for (int i = 1; i <= 3; ++i) {
        BinaryQuadraticForm q = cube_form(c, i);
        forms.push_back(io::to_json(q));
        text += io::format_form(q);
      }
      const Integer D = disc(cube_form(c, 1));
      emit(ctx, json{{"forms", forms}, {"disc", io::to_json(D)}}, text + D.get_str() + "\n");
    } else if (c_ccompose->parsed()) {
      auto v = parse_integers(ints, 16, "cube-compose");
      BhargavaCube c = compose_cubes(cube_from(v, 0), cube_from(v, 8));
      emit(ctx, io::to_json(c), io::format_cube(c));
    } else if (c_adjoint->parsed()) {
      IntMatrix a = k_adjoint(read_matrix(file_a), grade);
      emit(ctx, io::to_json(a), io::format_matrix(a));
    } else if (c_transition->parsed()) {
      IntMatrix A = read_matrix(file_a);
      IntMatrix E = read_matrix(file_b);
      IntMatrix H = transition_matrix(A, E);
      const Integer d = det(H);
      emit(ctx, json{{"H", io::to_json(H)}, {"det", io::to_json(d)}},
           io::format_matrix(H) + d.get_str() + "\n");
    }
  } catch (const InputError& e) {
    err << "error: input: " << e.what() << '\n';
    return 1;
  } catch (const MathError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace wedgemap::cli
