#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thetablocks/error.hpp"
#include "thetablocks/io.hpp"
#include "thetablocks/numtheory.hpp"
#include "thetablocks/verify.hpp"

using namespace thetablocks;
using io::json;

namespace {

struct Common {
  bool json = false;
  bool approx = false;
  std::uint64_t seed = kDefaultSeed;
  std::string ideal = "0,0";
  std::size_t cap = 0;  // 0: library defaults
  unsigned p = 0;
  std::string group;
  std::string normal = "auto:trivial";
  std::size_t theta = 0;
  std::string corpus;
  std::vector<std::string> checks;
};

std::size_t group_cap(const Common& c) { return c.cap ? c.cap : kDefaultOrderCap; }
std::size_t modular_cap(const Common& c) { return c.cap ? c.cap : kModularCap; }

void require_prime(const Common& c) {
  if (c.p < 2 || !nt::is_prime(c.p)) throw Error(ErrorKind::MalformedInput, "-p must be a prime");
}

std::string render(const CycNum& x, bool approx) {
  std::string s = x.str();
  if (!approx || s.find_first_not_of("-0123456789/") == std::string::npos) return s;
  auto z = x.approx();
  std::ostringstream o;
  o << std::fixed << std::setprecision(4) << z.real();
  if (std::abs(z.imag()) > 5e-13) o << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return s + " ~ " + o.str();
}

void print_grid(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(head.size());
  for (std::size_t j = 0; j < head.size(); ++j) w[j] = head[j].size();
  for (const auto& r : rows)
    for (std::size_t j = 0; j < r.size(); ++j) w[j] = std::max(w[j], r[j].size());
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) std::cout << "  ";
      std::cout << std::setw(static_cast<int>(w[j])) << r[j];
    }
    std::cout << '\n';
  };
  line(head);
  for (const auto& r : rows) line(r);
}

std::string members(const Subgroup& H) {
  std::string s = "{";
  for (std::size_t i = 0; i < H.members().size(); ++i) s += (i ? "," : "") + std::to_string(H.members()[i]);
  return s + "}";
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_table(const Common& c) {
  auto G = io::load_group(c.group, group_cap(c));
  auto T = character_table(G, group_cap(c));
  if (c.json) return emit(io::to_json(T)), 0;
  std::cout << G->name() << ": order " << G->order() << ", " << T.size() << " classes\n";
  std::vector<std::string> head{""};
  std::vector<std::string> sizes{"size"};
  for (const auto& k : G->classes()) {
    head.push_back(G->label(k.representative));
    sizes.push_back(std::to_string(k.members.size()));
  }
  std::vector<std::vector<std::string>> rows{sizes};
  for (std::size_t i = 0; i < T.size(); ++i) {
    std::vector<std::string> r{"X." + std::to_string(i)};
    for (const auto& v : T.row(i)) r.push_back(render(v, c.approx));
    rows.push_back(std::move(r));
  }
  print_grid(head, rows);
  return 0;
}

int cmd_blocks(const Common& c) {
  require_prime(c);
  auto G = io::load_group(c.group, group_cap(c));
  auto T = character_table(G, group_cap(c));
  auto P = p_blocks(T, c.p, io::parse_ideal_choice(c.ideal));
  if (c.json) return emit(io::to_json(P)), 0;
  std::cout << G->name() << ", p = " << c.p << ": " << P.blocks.size() << " block(s)\n";
  for (std::size_t b = 0; b < P.blocks.size(); ++b) {
    const auto& B = P.blocks[b];
    std::cout << "B" << b << ": rows";
    for (auto r : B.rows) std::cout << ' ' << r;
    std::cout << "; defect " << B.defect << "; defect class " << B.defect_class << "; defect group of order "
              << B.defect_group.order() << ' ' << members(B.defect_group) << '\n';
  }
  return 0;
}

struct Modular {
  GroupPtr G;
  CharacterTable T;
  BrauerTable BT;
};

Modular modular(const Common& c) {
  require_prime(c);
  auto G = io::load_group(c.group, group_cap(c));
  auto T = character_table(G, group_cap(c));
  auto red = reduction_for(T, c.p, io::parse_ideal_choice(c.ideal));
  auto BT = brauer_table(G, red, c.seed, modular_cap(c));
  return {G, std::move(T), std::move(BT)};
}

int cmd_modtable(const Common& c) {
  auto M = modular(c);
  if (c.json) return emit(io::to_json(M.BT)), 0;
  const auto& G = *M.G;
  std::cout << G.name() << ", p = " << c.p << ": " << M.BT.ibr.size() << " irreducible Brauer character(s)\n";
  std::vector<std::string> head{""};
  for (auto k : M.BT.pregular_classes) head.push_back(G.label(G.classes()[k].representative));
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < M.BT.ibr.size(); ++i) {
    std::vector<std::string> r{"phi." + std::to_string(i)};
    for (const auto& v : M.BT.ibr[i]) r.push_back(render(v, c.approx));
    rows.push_back(std::move(r));
  }
  print_grid(head, rows);
  return 0;
}

void print_matrix(const std::string& title, const IntMatrix& M, const std::string& row_prefix) {
  std::cout << title << '\n';
  std::vector<std::string> head{""};
  if (!M.empty())
    for (std::size_t j = 0; j < M[0].size(); ++j) head.push_back("phi." + std::to_string(j));
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<std::string> r{row_prefix + std::to_string(i)};
    for (long v : M[i]) r.push_back(std::to_string(v));
    rows.push_back(std::move(r));
  }
  print_grid(head, rows);
}

int cmd_decomp(const Common& c) {
  auto M = modular(c);
  auto P = p_blocks(M.T, c.p, io::parse_ideal_choice(c.ideal));
  auto D = decomposition_matrix(M.T, M.BT, P);
  if (c.json) return emit(io::to_json(D)), 0;
  std::cout << M.G->name() << ", p = " << c.p << '\n';
  print_matrix("decomposition matrix", D.d, "X.");
  std::cout << "block of each row:";
  for (auto b : D.block_labels) std::cout << ' ' << b;
  std::cout << "\nblock of each Brauer character:";
  for (auto b : D.brauer_blocks) std::cout << ' ' << b;
  std::cout << '\n';
  print_matrix("Cartan matrix", cartan_matrix(D), "phi.");
  return 0;
}

json normal_spec(const std::string& s) {
  if (s.rfind("auto:", 0) == 0) return s;
  json els = json::array();
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      els.push_back(std::stoul(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorKind::MalformedInput, "--normal must be auto:<name> or a comma-separated element list");
    }
  }
  return els;
}

int cmd_theta(const Common& c) {
  require_prime(c);
  auto G = io::load_group(c.group, group_cap(c));
  auto T = make_triple(G, io::normal_from_json(G, normal_spec(c.normal)), c.theta);
  auto R = theta_blocks(T, c.p, io::parse_ideal_choice(c.ideal));
  if (c.json) return emit(io::to_json(T, R)), 0;
  std::cout << G->name() << ", |N| = " << T.N.order() << ", theta = X." << c.theta << " of N (degree " << T.degree()
            << "), p = " << c.p << '\n';
  std::cout << "projective representation: " << R.P.construction << '\n';
  std::cout << "|Z| = " << R.R.k << ", |Ghat| = " << R.R.Ghat->order() << '\n';
  std::cout << "Irr(G|theta):";
  for (auto r : R.S.over_theta) std::cout << ' ' << r;
  std::cout << '\n' << R.blocks.size() << " theta-block(s)\n";
  for (std::size_t b = 0; b < R.blocks.size(); ++b) {
    const auto& B = R.blocks[b];
    std::cout << "B" << b << ": rows";
    for (auto r : B.rows) std::cout << ' ' << r;
    std::cout << "; |D_theta/N| = " << c.p << '^' << B.defect << "; D_theta " << members(B.defect_group) << '\n';
  }
  return 0;
}

int cmd_verify(const Common& c) {
  if (c.corpus.empty()) throw Error(ErrorKind::MalformedInput, "verify needs --corpus");
  auto corpus = io::load_corpus(c.corpus);
  CorpusOptions opt;
  opt.checks = c.checks;
  opt.seed = c.seed;
  opt.choice = io::parse_ideal_choice(c.ideal);
  opt.cap = group_cap(c);
  auto out = run_corpus(corpus, opt);
  auto s = summarize(out);
  if (c.json) {
    json arr = json::array();
    for (const auto& o : out) arr.push_back(to_json(o));
    emit({{"outcomes", arr},
          {"summary",
           {{"pass", s.pass}, {"fail", s.fail}, {"vacuous", s.vacuous}, {"hypothesis_not_met", s.hypothesis_not_met}}}});
  } else {
    for (const auto& o : out) {
      std::cout << std::left << std::setw(19) << to_string(o.status) << std::setw(14) << o.check << ' ' << o.instance;
      if (!o.detail.empty()) std::cout << "  (" << o.detail << ')';
      std::cout << '\n';
      if (o.status == Status::Fail && o.data.contains("reproduce")) std::cout << "  reproduce: " << o.data["reproduce"].dump() << '\n';
    }
    std::cout << std::right << s.pass << " pass, " << s.fail << " fail, " << s.vacuous << " vacuous, "
              << s.hypothesis_not_met << " hypothesis not met\n";
  }
  return s.fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character tables, p-blocks and theta-blocks of finite groups"};
  app.require_subcommand(1);
  Common c;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", c.json, "Emit JSON");
    sub->add_flag("--approx", c.approx, "Add decimal approximations to text output");
    sub->add_option("--seed", c.seed, "Seed for the randomized module chopper");
    sub->add_option("--ideal-choice", c.ideal, "Maximal ideal choice i,j (factor, root)");
    sub->add_option("--cap", c.cap, "Order cap for groups and modular computations");
  };
  auto needs_group = [&](CLI::App* sub) { sub->add_option("group", c.group, "Group JSON file or auto:<name>")->required(); };
  auto needs_p = [&](CLI::App* sub) { sub->add_option("-p", c.p, "Prime")->required(); };

  auto* table = app.add_subcommand("table", "Ordinary character table");
  common(table), needs_group(table);
  auto* blocks = app.add_subcommand("blocks", "p-blocks with defect groups");
  common(blocks), needs_p(blocks), needs_group(blocks);
  auto* modtable = app.add_subcommand("modtable", "Irreducible Brauer characters");
  common(modtable), needs_p(modtable), needs_group(modtable);
  auto* decomp = app.add_subcommand("decomp", "Decomposition and Cartan matrices");
  common(decomp), needs_p(decomp), needs_group(decomp);
  auto* theta = app.add_subcommand("theta", "theta-blocks of a character triple");
  common(theta), needs_p(theta), needs_group(theta);
  theta->add_option("--normal", c.normal, "auto:<name> or comma-separated elements");
  theta->add_option("--theta", c.theta, "Row of the character table of N");
  auto* verify = app.add_subcommand("verify", "Run checks over a corpus of triples");
  common(verify);
  verify->add_option("--corpus", c.corpus, "Corpus JSON file")->required();
  verify->add_option("--check,--theorem", c.checks, "Restrict to these check ids")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*table) return cmd_table(c);
    if (*blocks) return cmd_blocks(c);
    if (*modtable) return cmd_modtable(c);
    if (*decomp) return cmd_decomp(c);
    if (*theta) return cmd_theta(c);
    if (*verify) return cmd_verify(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
