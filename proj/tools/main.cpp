#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "contact/kostant.hpp"
#include "contact/problem.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Timer {
  bool enabled = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ~Timer() {
    if (!enabled) return;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "wall_clock_ms " << ms << "\n";
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-type analysis of contact-compatible operators on the "
               "Heisenberg group"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  bool timings = false;
  bool require_finite_type = false;
  int lmax_flag = -1;
  int nmax_flag = -1;
  app.add_flag("--json", json, "emit machine-readable JSON");
  app.add_flag("--timings", timings, "print wall-clock timings to stderr");
  app.add_flag("--require-finite-type", require_finite_type,
               "exit 2 when the chain does not terminate within the cap");
  app.add_option("--lmax", lmax_flag, "prolongation level cap override");
  app.add_option("--nmax", nmax_flag, "oracle weighted-degree cap override");

  auto* sperp = app.add_subcommand("sperp", "dimension and basis summary of S_perp^l");
  int sp_n = 1, sp_l = 0;
  sperp->add_option("n", sp_n)->required();
  sperp->add_option("l", sp_l)->required();

  auto* symbol = app.add_subcommand("symbol", "enhanced symbol of an operator");
  std::string symbol_path;
  symbol->add_option("document", symbol_path)->required();

  auto* prolong = app.add_subcommand("prolong", "full prolongation pipeline");
  std::string prolong_path;
  prolong->add_option("document", prolong_path)->required();

  auto* bound = app.add_subcommand("bound", "bound weight and Weyl dimension");
  int b_n = 1, b_k = 1;
  std::vector<long> b_weight;
  bound->add_option("n", b_n)->required();
  bound->add_option("k", b_k)->required();
  bound->add_option("weight", b_weight)->expected(-1);

  auto* check = app.add_subcommand("check", "graded Kostant cross-check");
  int c_n = 1, c_k = 1, c_m = 0;
  check->add_option("n", c_n)->required();
  check->add_option("k", c_k)->required();
  check->add_option("m", c_m)->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "polynomial solution profile");
  std::string oracle_path;
  oracle_cmd->add_option("document", oracle_path)->required();

  auto* verify = app.add_subcommand("verify", "check the document's solution block");
  std::string verify_path;
  verify->add_option("document", verify_path)->required();

  CLI11_PARSE(app, argc, argv);

  Timer timer;
  timer.enabled = timings;

  try {
    if (sperp->parsed()) {
      contact::Subspace s = contact::build_sperp(sp_n, sp_l);
      if (json) {
        nlohmann::json j;
        j["n"] = sp_n;
        j["l"] = sp_l;
        j["ambient_dim"] = s.ambient_dim();
        j["dim"] = s.dim();
        j["formula_dim"] = contact::sperp_dim_formula(sp_n, sp_l);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "sperp n=" << sp_n << " l=" << sp_l << "\n";
        std::cout << "  ambient_dim " << s.ambient_dim() << "\n";
        std::cout << "  dim " << s.dim() << "\n";
        std::cout << "  formula_dim " << contact::sperp_dim_formula(sp_n, sp_l)
                  << "\n";
        std::cout << "  basis_nnz " << s.basis().nnz() << "\n";
      }
      return 0;
    }
    if (symbol->parsed()) {
      auto doc = contact::parse_document(read_file(symbol_path));
      auto op = contact::parse_operator(doc);
      contact::Matrix sym = contact::enhanced_symbol(op);
      auto& model = contact::monomial_embed(op.n, op.declared_order);
      if (json) {
        nlohmann::json j;
        j["rows"] = sym.rows();
        j["cols"] = sym.cols();
        j["rank"] = contact::rank(sym);
        j["dim_sperp_k"] = static_cast<std::int64_t>(model.monomials.size());
        nlohmann::json entries = nlohmann::json::array();
        for (std::int64_t c = 0; c < sym.cols(); ++c)
          for (const auto& [r, v] : sym.col(c).entries())
            entries.push_back({{"row", r}, {"col", c}, {"value", v.get_str()}});
        j["entries"] = entries;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "symbol rows " << sym.rows() << " cols " << sym.cols()
                  << " rank " << contact::rank(sym) << "\n";
        for (std::int64_t c = 0; c < sym.cols(); ++c)
          for (const auto& [r, v] : sym.col(c).entries())
            std::cout << "  [" << r << "," << c << "] " << v.get_str() << "\n";
      }
      return 0;
    }
    if (prolong->parsed()) {
      auto doc = contact::parse_document(read_file(prolong_path));
      if (lmax_flag > 0) doc.lmax = lmax_flag;
      if (nmax_flag >= 0) doc.nmax = nmax_flag;
      contact::Report r = contact::run_prolong(doc);
      std::cout << (json ? contact::report_json(r) : contact::report_text(r));
      if (require_finite_type &&
          r.chain.verdict == contact::Verdict::NotFiniteTypeWithinCap)
        return 2;
      return 0;
    }
    if (bound->parsed()) {
      contact::HighestWeight e;
      e.labels = b_weight;
      if (e.rank() != b_n)
        throw std::invalid_argument("bound: weight must have n entries");
      contact::HighestWeight w = contact::bound_weight(e, b_k);
      contact::Integer d = contact::weyl_dim(b_n + 1, w);
      if (json) {
        nlohmann::json j;
        j["bound_weight"] = w.labels;
        j["weyl_dim"] = d.get_str();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "bound_weight [";
        for (std::size_t i = 0; i < w.labels.size(); ++i)
          std::cout << (i ? ", " : "") << w.labels[i];
        std::cout << "]\nweyl_dim " << d.get_str() << "\n";
      }
      return 0;
    }
    if (check->parsed()) {
      int lmax = lmax_flag > 0 ? lmax_flag : contact::cartan_lmax(c_n, c_k, c_m);
      contact::GradedReport rep = contact::graded_check(c_n, c_k, c_m, lmax);
      if (json) {
        nlohmann::json j;
        j["n"] = rep.n;
        j["k"] = rep.k;
        j["m"] = rep.m;
        j["dims_vj"] = rep.dims_vj;
        j["total"] = rep.total.get_str();
        j["weyl_total"] = rep.weyl_total.get_str();
        j["passes"] = rep.passes;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "graded_check n=" << rep.n << " k=" << rep.k
                  << " m=" << rep.m << "\n  dims_vj [";
        for (std::size_t i = 0; i < rep.dims_vj.size(); ++i)
          std::cout << (i ? ", " : "") << rep.dims_vj[i];
        std::cout << "]\n  total " << rep.total.get_str() << "\n  weyl_total "
                  << rep.weyl_total.get_str() << "\n  passes "
                  << (rep.passes ? "true" : "false") << "\n";
      }
      return rep.passes ? 0 : 1;
    }
    if (oracle_cmd->parsed()) {
      auto doc = contact::parse_document(read_file(oracle_path));
      if (nmax_flag >= 0) doc.nmax = nmax_flag;
      auto op = contact::parse_operator(doc);
      contact::SolutionProfile p = contact::stabilized_dim(op, doc.nmax);
      if (json) {
        nlohmann::json j;
        j["dims"] = p.dims_by_degree;
        if (p.stabilized_dim)
          j["stabilized"] = *p.stabilized_dim;
        else
          j["stabilized"] = nullptr;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "oracle dims [";
        for (std::size_t i = 0; i < p.dims_by_degree.size(); ++i)
          std::cout << (i ? ", " : "") << p.dims_by_degree[i];
        std::cout << "]\nstabilized ";
        if (p.stabilized_dim)
          std::cout << *p.stabilized_dim << "\n";
        else
          std::cout << "none\n";
      }
      return 0;
    }
    if (verify->parsed()) {
      auto doc = contact::parse_document(read_file(verify_path));
      auto op = contact::parse_operator(doc);
      contact::PolySection s = contact::parse_solution_section(doc);
      bool ok = contact::verify_solution(op, s);
      if (json) {
        nlohmann::json j;
        j["verifies"] = ok;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "verifies " << (ok ? "true" : "false") << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
