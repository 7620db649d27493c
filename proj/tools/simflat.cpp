// simflat: exact-arithmetic computations with finite rational symplectic
// matrix groups.  See README.md for the file formats.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "simflat/algebra.hpp"
#include "simflat/autiso.hpp"
#include "simflat/canon.hpp"
#include "simflat/enumerate.hpp"
#include "simflat/error.hpp"
#include "simflat/families.hpp"
#include "simflat/invlat.hpp"
#include "simflat/io.hpp"
#include "simflat/simfdb.hpp"
#include "simflat/zorder.hpp"

using namespace simflat;

namespace {

int cmd_order(const std::string& path) {
  MatrixGroup g = read_group_file(path);
  std::cout << g.order().get_str() << "\n";
  return 0;
}

int cmd_formspace(const std::string& path) {
  MatrixGroup g = read_group_file(path);
  FormSpace fs = fixed_forms(g);
  std::cout << "sym " << fs.basis_sym.size() << "\n";
  for (const auto& b : fs.basis_sym) write_matrix(std::cout, b);
  std::cout << "skew " << fs.basis_skew.size() << "\n";
  for (const auto& b : fs.basis_skew) write_matrix(std::cout, b);
  return 0;
}

int cmd_symplectic(const std::string& path) {
  MatrixGroup g = read_group_file(path);
  bool s = is_symplectic(g);
  std::cout << (s ? "symplectic" : "not symplectic") << "\n";
  return s ? 0 : 1;
}

int cmd_autgrp(const std::string& latpath, const std::vector<std::string>& formpaths) {
  Lattice L(read_matrix_file(latpath));
  FormTuple T;
  T.posdef = read_matrix_file(formpaths[0]);
  for (size_t i = 1; i < formpaths.size(); ++i) T.extras.push_back(read_matrix_file(formpaths[i]));
  AutResult a = aut_group(L, T);
  std::cout << "order " << a.order.get_str() << "\n";
  std::cout << "gens " << a.generators.size() << "\n";
  for (const auto& g : a.generators) write_matrix(std::cout, g);
  return 0;
}

// tuple file: lattice matrix, then one or more forms, concatenated
std::pair<Lattice, FormTuple> read_tuple_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::MalformedEntry, "cannot open " + path);
  QMat lat = read_matrix(in);
  FormTuple T;
  T.posdef = read_matrix(in);
  while (true) {
    std::streampos pos = in.tellg();
    int r, c;
    if (!(in >> r >> c)) break;
    in.seekg(pos);
    T.extras.push_back(read_matrix(in));
  }
  return {Lattice(lat), T};
}

int cmd_isometry(const std::string& a, const std::string& b) {
  auto [l1, t1] = read_tuple_file(a);
  auto [l2, t2] = read_tuple_file(b);
  auto t = isometry(l1, t1, l2, t2);
  if (!t) {
    std::cout << "none\n";
    return 1;
  }
  write_matrix(std::cout, *t);
  return 0;
}

int cmd_lattices(const std::string& path) {
  MatrixGroup g = read_group_file(path);
  QMat f0 = average_form(g, QMat::identity(g.dim()));
  QMat stack(0, g.dim());
  for (const auto& e : g.elements()) stack = stack.vcat(e);
  CenteringGraph graph = lattice_classes(g, Lattice(stack), f0);
  std::cout << "classes " << graph.class_reps.size() << " nodes " << graph.nodes.size() << "\n";
  for (int r : graph.class_reps) write_matrix(std::cout, graph.nodes[r].basis());
  return 0;
}

int cmd_bravais(const std::string& path) {
  MatrixGroup g = read_group_file(path);
  QMat f0 = average_form(g, QMat::identity(g.dim()));
  MatrixGroup b = bravais_group(g, f0);
  std::cout << "order " << b.order().get_str() << "\n";
  write_group(std::cout, b);
  return 0;
}

int cmd_enumerate(const std::string& path) {
  MatrixGroup g = read_group_file(path);
  auto classes = simf_supergroups(g);
  std::cout << "classes " << classes.size() << "\n";
  for (const auto& c : classes) {
    std::cout << "order " << c.aut.order.get_str() << "\n";
    write_group(std::cout, c.aut.group(g.dim()));
  }
  return 0;
}

int cmd_construct(const std::string& family, const std::vector<long>& params) {
  auto need = [&](size_t n) {
    if (params.size() != n) fail(Err::BadParameter, family + " needs " + std::to_string(n) + " parameter(s)");
  };
  if (family == "cyclic") {
    need(1);
    write_group(std::cout, cyclic_group((int)params[0]));
  } else if (family == "cpco") {
    need(1);
    write_group(std::cout, cp_co(params[0]));
  } else if (family == "qd") {
    need(1);
    write_group(std::cout, qd_group((int)params[0]));
  } else if (family == "T") {
    need(1);
    write_group(std::cout, extraspecial_T((int)params[0]));
  } else if (family == "ep") {
    need(2);
    auto ep = extraspecial_p(params[0], (int)params[1]);
    write_group(std::cout, ep.group);
    write_matrix(std::cout, ep.zeta_action);
  } else if (family == "wall") {
    need(1);
    WallPair w = wall_lattices((int)params[0]);
    write_matrix(std::cout, w.L.basis());
    write_matrix(std::cout, w.Lp.basis());
  } else if (family == "wallM") {
    need(1);
    GaussLattice2 gm = wall_M((int)params[0]);
    write_matrix(std::cout, gm.blowup.basis());
    write_matrix(std::cout, gm.sqrt_minus2);
  } else if (family == "minkowski") {
    need(1);
    std::cout << minkowski_bound((int)params[0]).get_str() << "\n";
  } else if (family == "gl23") {
    write_group(std::cout, gl23());
  } else if (family == "sl23") {
    write_group(std::cout, sl23());
  } else if (family == "sl23oc3") {
    write_group(std::cout, sl23_circ_c3());
  } else if (family == "c4tA2") {
    write_group(std::cout, c4_tensor_aut_a2());
  } else if (family == "q8") {
    write_group(std::cout, q8());
  } else {
    fail(Err::BadParameter, "unknown family: " + family);
  }
  return 0;
}

int cmd_db_list(const std::string& path) {
  auto db = db_load(path);
  for (const auto& e : db)
    std::cout << e.dim << " " << e.order.get_str() << " " << e.name << "\n";
  return 0;
}

int cmd_db_verify(const std::string& path) {
  auto db = db_load(path);
  bool all = true;
  for (const auto& e : db) {
    VerifyReport r = db_verify(e);
    std::cout << e.name << ": " << (r.pass() ? "ok" : "FAIL") << " [forms " << r.forms_ok
              << " order " << r.order_ok << " invariant " << r.invariant_ok << " minpoly "
              << r.minpoly_ok << " normalized " << r.normalized_ok << " minimal " << r.minimal_ok
              << "]";
    if (!r.detail.empty()) std::cout << " " << r.detail;
    std::cout << "\n";
    all = all && r.pass();
  }
  return all ? 0 : 1;
}

int cmd_db_recognize(const std::string& grouppath, const std::string& dbpath) {
  MatrixGroup g = read_group_file(grouppath);
  auto db = db_load(dbpath);
  std::optional<Recognition> rec;
  try {
    rec = recognize(g, db);
  } catch (const Error& e) {
    if (e.code() == Err::BadInput) {
      std::cout << "bad input: " << e.what() << "\n";
      return 1;
    }
    throw;
  }
  if (!rec) {
    std::cout << "no match\n";
    return 2;
  }
  std::cout << rec->name << "\n";
  write_matrix(std::cout, rec->conjugator);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with finite rational symplectic matrix groups"};
  app.require_subcommand(1);

  std::string path, path2;
  std::vector<std::string> formpaths;
  std::vector<long> params;
  std::string family;

  auto* order = app.add_subcommand("order", "order of a finite matrix group");
  order->add_option("group", path)->required();

  auto* formspace = app.add_subcommand("formspace", "invariant form space, symmetric and skew bases");
  formspace->add_option("group", path)->required();

  auto* sympl = app.add_subcommand("symplectic", "test for an invertible invariant skew form");
  sympl->add_option("group", path)->required();

  auto* autg = app.add_subcommand("autgrp", "automorphism group of a lattice with forms");
  autg->add_option("lattice", path)->required();
  autg->add_option("forms", formpaths)->required()->expected(-1);

  auto* iso = app.add_subcommand("isometry", "simultaneous isometry of two lattice/form tuples");
  iso->add_option("a", path)->required();
  iso->add_option("b", path2)->required();

  auto* lats = app.add_subcommand("lattices", "invariant lattice class representatives");
  lats->add_option("group", path)->required();

  auto* brav = app.add_subcommand("bravais", "generalized Bravais group");
  brav->add_option("group", path)->required();

  auto* enu = app.add_subcommand("enumerate", "s.i.m.f. supergroup classes");
  enu->add_option("group", path)->required();

  auto* cons = app.add_subcommand("construct", "emit a family group or lattice");
  cons->add_option("family", family)->required();
  cons->add_option("params", params);

  auto* db = app.add_subcommand("db", "database operations");
  db->require_subcommand(1);
  auto* dblist = db->add_subcommand("list", "list entries");
  dblist->add_option("file", path)->required();
  auto* dbverify = db->add_subcommand("verify", "verify every entry");
  dbverify->add_option("file", path)->required();
  auto* dbrec = db->add_subcommand("recognize", "match a group against the database");
  dbrec->add_option("group", path)->required();
  dbrec->add_option("db", path2)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*order) return cmd_order(path);
    if (*formspace) return cmd_formspace(path);
    if (*sympl) return cmd_symplectic(path);
    if (*autg) return cmd_autgrp(path, formpaths);
    if (*iso) return cmd_isometry(path, path2);
    if (*lats) return cmd_lattices(path);
    if (*brav) return cmd_bravais(path);
    if (*enu) return cmd_enumerate(path);
    if (*cons) return cmd_construct(family, params);
    if (*dblist) return cmd_db_list(path);
    if (*dbverify) return cmd_db_verify(path);
    if (*dbrec) return cmd_db_recognize(path, path2);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
