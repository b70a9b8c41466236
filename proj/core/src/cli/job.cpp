#include "smashcoh/cli/job.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace smashcoh {

namespace {

struct Line {
  int no = 0;
  std::string key, value;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

const std::set<std::string> kSections{"gamma", "algebra", "action", "extension", "module", "lhs"};

class Parser {
 public:
  explicit Parser(std::string name) : name_(std::move(name)) {}

  void read(const std::string& text) {
    std::istringstream is(text);
    std::string raw, section;
    int no = 0;
    while (std::getline(is, raw)) {
      ++no;
      std::string s = trim(raw.substr(0, raw.find('#')));
      if (s.empty()) continue;
      if (s.front() == '[') {
        if (s.back() != ']') {
          error(no, "unterminated section header");
          continue;
        }
        section = trim(s.substr(1, s.size() - 2));
        if (!kSections.count(section)) error(no, "unknown section [" + section + "]");
        if (sections_.count(section)) error(no, "section [" + section + "] appears twice");
        sections_[section];
        continue;
      }
      auto eq = s.find('=');
      if (eq == std::string::npos) {
        error(no, "expected 'key = value'");
        continue;
      }
      Line l{no, trim(s.substr(0, eq)), trim(s.substr(eq + 1))};
      if (l.key.empty()) {
        error(no, "empty key");
        continue;
      }
      l.key = join(words(l.key));
      auto& sec = sections_[section];
      for (const auto& other : sec)
        if (other.key == l.key) error(no, "duplicate key '" + l.key + "' (first on line " + std::to_string(other.no) + ")");
      sec.push_back(l);
    }
  }

  JobSpec build(const JobOverrides& over) {
    JobSpec job;
    job.name = name_;
    std::string field = get("", "field").value_or("q");
    if (over.field) field = *over.field;
    job.field = parse_field(field, line_of("", "field"));
    field_ = job.field;
    if (auto t = get("", "task")) job.task = *t;
    if (over.task) job.task = *over.task;
    bool known = false;
    for (const auto& t : job_tasks()) known = known || t == job.task;
    if (!known) error(line_of("", "task"), "unknown task '" + job.task + "'");
    job.maxdeg = get_int("", "maxdeg").value_or(3);
    if (over.maxdeg) job.maxdeg = *over.maxdeg;
    if (job.maxdeg < 0) error(line_of("", "maxdeg"), "maxdeg must be >= 0");
    job.pages = get_int("", "pages").value_or(4);
    if (over.pages) job.pages = *over.pages;
    if (job.pages < 1) error(line_of("", "pages"), "pages must be >= 1");
    if (auto f = get("", "filtration")) {
      if (*f == "row")
        job.filtration = Filtration::row;
      else if (*f != "column")
        error(line_of("", "filtration"), "filtration must be 'column' or 'row'");
    }
    if (auto o = get("", "output")) {
      if (*o != "text" && *o != "json") error(line_of("", "output"), "output must be 'text' or 'json'");
      job.output = *o;
    }
    for (const auto& l : sections_[""])
      if (!std::set<std::string>{"field", "task", "maxdeg", "pages", "filtration", "output", "name"}.count(l.key))
        error(l.no, "unknown key '" + l.key + "'");
    if (auto n = get("", "name")) job.name = *n;
    fail_if_errors();

    if (job.task == "lhs") {
      if (!sections_.count("lhs")) error(0, "task lhs needs an [lhs] section");
      fail_if_errors();
      job.lhs = parse_lhs();
      fail_if_errors();
      return job;
    }
    if (!sections_.count("gamma")) error(0, "missing [gamma] section");
    if (!sections_.count("algebra")) error(0, "missing [algebra] section");
    if (job.task == "ext" && !sections_.count("module")) error(0, "task ext needs a [module] section");
    fail_if_errors();
    HopfAlgebra h = parse_gamma();
    FinDimAlgebra a = parse_algebra_section("algebra");
    fail_if_errors();
    std::vector<std::string> bad;
    for (auto& v : validate_hopf(h)) bad.push_back("gamma: " + v);
    for (auto& v : validate_algebra(a)) bad.push_back("algebra: " + v);
    if (!bad.empty()) throw ValidationError("invalid job " + name_, bad);
    ModuleAlgebraAction act = parse_action(h, a);
    fail_if_errors();
    for (auto& v : validate_action(act)) bad.push_back("action: " + v);
    if (!bad.empty()) throw ValidationError("invalid job " + name_, bad);
    job.action = act;
    if (sections_.count("extension")) job.extension = parse_extension(act);
    if (sections_.count("module")) job.module = parse_module(act);
    fail_if_errors();
    return job;
  }

 private:
  static std::string join(const std::vector<std::string>& w) {
    std::string s;
    for (const auto& x : w) s += (s.empty() ? "" : " ") + x;
    return s;
  }

  void error(int line, const std::string& msg) {
    errors_.push_back((line > 0 ? "line " + std::to_string(line) + ": " : "") + msg);
  }
  void fail_if_errors() {
    if (!errors_.empty()) throw ParseError("cannot parse job " + name_, errors_);
  }

  std::optional<std::string> get(const std::string& sec, const std::string& key) {
    for (const auto& l : sections_[sec])
      if (l.key == key) return l.value;
    return std::nullopt;
  }
  int line_of(const std::string& sec, const std::string& key) {
    for (const auto& l : sections_[sec])
      if (l.key == key) return l.no;
    return 0;
  }
  std::optional<int> get_int(const std::string& sec, const std::string& key) {
    auto v = get(sec, key);
    if (!v) return std::nullopt;
    try {
      std::size_t used = 0;
      int x = std::stoi(*v, &used);
      if (used == v->size()) return x;
    } catch (const std::exception&) {
    }
    error(line_of(sec, key), "'" + key + "' must be an integer");
    return std::nullopt;
  }
  /// Lines whose key starts with the given first word.
  std::vector<std::pair<Line, std::vector<std::string>>> entries(const std::string& sec, const std::string& head) {
    std::vector<std::pair<Line, std::vector<std::string>>> out;
    for (const auto& l : sections_[sec]) {
      auto w = words(l.key);
      if (w.size() > 1 && w[0] == head) out.emplace_back(l, std::vector<std::string>(w.begin() + 1, w.end()));
    }
    return out;
  }
  void check_keys(const std::string& sec, const std::set<std::string>& allowed) {
    for (const auto& l : sections_[sec]) {
      auto w = words(l.key);
      if (!allowed.count(w[0])) error(l.no, "unknown key '" + l.key + "' in [" + sec + "]");
    }
  }

  Field parse_field(const std::string& s, int line) {
    if (s == "q") return Field::rationals();
    if (s.rfind("p=", 0) == 0) {
      try {
        return Field::prime(std::stoll(s.substr(2)));
      } catch (const std::exception& e) {
        error(line, std::string("bad prime field: ") + e.what());
        return Field::rationals();
      }
    }
    error(line, "field must be 'q' or 'p=<prime>'");
    return Field::rationals();
  }

  std::optional<Scalar> scalar(const std::string& s, int line) {
    try {
      std::string t = s;
      if (t.size() > 1 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
      return field_.parse(trim(t));
    } catch (const std::exception& e) {
      error(line, "bad number '" + s + "': " + e.what());
      return std::nullopt;
    }
  }

  /// Linear combination of labels, or of 'a|b' tensor labels when tensor is set.
  std::optional<SparseVec> expr(const std::vector<std::string>& labels, const std::string& text, int line,
                                bool tensor = false) {
    std::map<std::string, int> idx;
    for (std::size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = static_cast<int>(i);
    auto label_index = [&](const std::string& lab) -> std::optional<std::int64_t> {
      if (!tensor) {
        if (auto it = idx.find(lab); it != idx.end()) return it->second;
        return std::nullopt;
      }
      auto bar = lab.find('|');
      if (bar == std::string::npos) return std::nullopt;
      auto a = idx.find(lab.substr(0, bar)), b = idx.find(lab.substr(bar + 1));
      if (a == idx.end() || b == idx.end()) return std::nullopt;
      return static_cast<std::int64_t>(a->second) * static_cast<std::int64_t>(labels.size()) + b->second;
    };
    std::string s;
    for (char c : text)
      if (c != ' ' && c != '\t') s += c;
    if (s == "0") return SparseVec{};
    Accumulator acc;
    std::size_t pos = 0;
    int depth = 0;
    std::vector<std::string> terms;
    std::string cur;
    for (; pos < s.size(); ++pos) {
      char c = s[pos];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if ((c == '+' || c == '-') && depth == 0 && !cur.empty() && cur.back() != '*' && cur.back() != '/') {
        terms.push_back(cur);
        cur = c == '-' ? "-" : "";
        continue;
      }
      cur += c;
    }
    if (!cur.empty()) terms.push_back(cur);
    for (auto t : terms) {
      Scalar coef = field_.one();
      if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        if (t[0] == '-') coef = -coef;
        t = t.substr(1);
      }
      std::string lab = t;
      if (auto star = t.rfind('*'); star != std::string::npos) {
        auto c = scalar(t.substr(0, star), line);
        if (!c) return std::nullopt;
        coef = coef * *c;
        lab = t.substr(star + 1);
      }
      auto i = label_index(lab);
      if (!i) {
        error(line, "unknown basis element '" + lab + "'");
        return std::nullopt;
      }
      acc.add(*i, coef);
    }
    return acc.finish();
  }

  std::optional<FiniteGroup> group_descriptor(const std::string& text, int line) {
    auto w = words(text);
    try {
      if (w.size() == 1 && w[0] == "trivial") return trivial_group();
      if (w.size() == 1 && w[0] == "s3") return symmetric_group_3();
      if ((w.size() == 2 || w.size() == 3) && w[0] == "cyclic")
        return cyclic_group(std::stoi(w[1]), w.size() == 3 ? w[2] : "t");
    } catch (const std::exception& e) {
      error(line, std::string("bad group: ") + e.what());
      return std::nullopt;
    }
    error(line, "group must be 'trivial', 's3' or 'cyclic <n> [generator]'");
    return std::nullopt;
  }

  std::optional<FiniteGroup> custom_group(const std::string& sec) {
    auto elems = words(*get(sec, "elements"));
    std::map<std::string, int> idx;
    for (std::size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> table(elems.size());
    for (auto& [l, args] : entries(sec, "row")) {
      if (args.size() != 1 || !idx.count(args[0])) {
        error(l.no, "row key must name one element");
        continue;
      }
      auto vals = words(l.value);
      std::vector<int> row;
      for (const auto& v : vals) {
        if (!idx.count(v)) {
          error(l.no, "unknown element '" + v + "'");
          continue;
        }
        row.push_back(idx[v]);
      }
      if (row.size() != elems.size()) error(l.no, "row must list one product per element");
      table[static_cast<std::size_t>(idx[args[0]])] = row;
    }
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (table[i].empty()) error(line_of(sec, "elements"), "missing row for element '" + elems[i] + "'");
    if (!errors_.empty()) return std::nullopt;
    try {
      return FiniteGroup(elems, table);
    } catch (const NotAGroup& e) {
      throw ValidationError("invalid job " + name_, {std::string("gamma: ") + e.what()});
    }
  }

  /// basis / unit / mul entries.
  std::optional<FinDimAlgebra> custom_algebra(const std::string& sec) {
    auto b = get(sec, "basis");
    auto u = get(sec, "unit");
    if (!b || !u) {
      error(line_of(sec, b ? "unit" : "basis"), "[" + sec + "] needs 'basis' and 'unit'");
      return std::nullopt;
    }
    auto labels = words(*b);
    int dim = static_cast<int>(labels.size());
    auto unit = expr(labels, *u, line_of(sec, "unit"));
    if (!unit) return std::nullopt;
    std::vector<SparseVec> table(static_cast<std::size_t>(dim * dim));
    std::vector<char> given(table.size(), 0);
    for (auto& [l, args] : entries(sec, "mul")) {
      auto ia = std::find(labels.begin(), labels.end(), args.size() == 2 ? args[0] : "");
      auto ib = std::find(labels.begin(), labels.end(), args.size() == 2 ? args[1] : "");
      if (args.size() != 2 || ia == labels.end() || ib == labels.end()) {
        error(l.no, "mul key must name two basis elements");
        continue;
      }
      auto v = expr(labels, l.value, l.no);
      if (!v) continue;
      std::size_t k = static_cast<std::size_t>((ia - labels.begin()) * dim + (ib - labels.begin()));
      table[k] = *v;
      given[k] = 1;
    }
    // products with a unit basis vector default to the identity action
    if (unit->size() == 1 && unit->terms[0].second == field_.one()) {
      int e = static_cast<int>(unit->terms[0].first);
      for (int i = 0; i < dim; ++i) {
        SparseVec ei{{{i, field_.one()}}};
        if (!given[e * dim + i]) table[static_cast<std::size_t>(e * dim + i)] = ei;
        if (!given[i * dim + e]) table[static_cast<std::size_t>(i * dim + e)] = ei;
      }
    }
    return FinDimAlgebra(field_, labels, table, unit->to_dense(static_cast<std::size_t>(dim)));
  }

  std::optional<FinDimAlgebra> builtin_algebra(const std::string& text, int line) {
    auto w = words(text);
    try {
      if (w.size() == 1 && w[0] == "ground") return truncated_polynomial(field_, 1);
      if ((w.size() == 2 || w.size() == 3) && w[0] == "truncated")
        return truncated_polynomial(field_, std::stoi(w[1]), w.size() == 3 ? w[2] : "x");
      if (w.size() >= 2 && w[0] == "group") {
        auto g = group_descriptor(text.substr(text.find("group") + 5), line);
        if (g) return group_algebra(*g, field_).algebra();
        return std::nullopt;
      }
    } catch (const std::exception& e) {
      error(line, std::string("bad builtin algebra: ") + e.what());
      return std::nullopt;
    }
    error(line, "builtin must be 'ground', 'truncated <n> [var]' or 'group <group>'");
    return std::nullopt;
  }

  HopfAlgebra parse_gamma() {
    const std::string sec = "gamma";
    check_keys(sec, {"group", "hopf", "elements", "row", "basis", "unit", "mul", "coproduct", "counit", "antipode"});
    if (auto g = get(sec, "group")) {
      auto grp = group_descriptor(*g, line_of(sec, "group"));
      if (grp) return group_algebra(*grp, field_);
      return {};
    }
    if (get(sec, "elements")) {
      auto grp = custom_group(sec);
      if (grp) return group_algebra(*grp, field_);
      return {};
    }
    if (auto h = get(sec, "hopf")) {
      if (*h == "sweedler") return sweedler_h4(field_);
      if (*h == "trivial") return trivial_hopf(field_);
      if (*h != "custom") {
        error(line_of(sec, "hopf"), "hopf must be 'sweedler', 'trivial' or 'custom'");
        return {};
      }
      auto alg = custom_algebra(sec);
      if (!alg) return {};
      int dim = alg->dim();
      const auto& labels = alg->labels();
      std::vector<SparseVec> cop(static_cast<std::size_t>(dim));
      Vec counit(static_cast<std::size_t>(dim), field_.zero());
      Matrix s(field_, dim, dim);
      std::vector<char> have_c(static_cast<std::size_t>(dim)), have_e(static_cast<std::size_t>(dim)),
          have_s(static_cast<std::size_t>(dim));
      auto index = [&](const std::vector<std::string>& args, int line) {
        if (args.size() == 1)
          for (int i = 0; i < dim; ++i)
            if (labels[i] == args[0]) return i;
        error(line, "key must name one basis element");
        return -1;
      };
      for (auto& [l, args] : entries(sec, "coproduct")) {
        int i = index(args, l.no);
        if (i < 0) continue;
        if (auto v = expr(labels, l.value, l.no, true)) cop[i] = *v, have_c[i] = 1;
      }
      for (auto& [l, args] : entries(sec, "counit")) {
        int i = index(args, l.no);
        if (i < 0) continue;
        if (auto v = scalar(l.value, l.no)) counit[i] = *v, have_e[i] = 1;
      }
      for (auto& [l, args] : entries(sec, "antipode")) {
        int i = index(args, l.no);
        if (i < 0) continue;
        if (auto v = expr(labels, l.value, l.no)) s.set_col(i, v->to_dense(static_cast<std::size_t>(dim))), have_s[i] = 1;
      }
      for (int i = 0; i < dim; ++i) {
        if (!have_c[i]) error(line_of(sec, "hopf"), "missing coproduct of '" + labels[i] + "'");
        if (!have_e[i]) error(line_of(sec, "hopf"), "missing counit of '" + labels[i] + "'");
        if (!have_s[i]) error(line_of(sec, "hopf"), "missing antipode of '" + labels[i] + "'");
      }
      if (!errors_.empty()) return {};
      std::vector<std::string> bad;
      for (auto& v : validate_algebra(*alg)) bad.push_back("gamma: " + v);
      if (!bad.empty()) throw ValidationError("invalid job " + name_, bad);
      HopfAlgebra out(*alg, cop, counit, s);
      out.name = "custom";
      return out;
    }
    error(0, "[gamma] needs 'group', 'elements' or 'hopf'");
    return {};
  }

  FinDimAlgebra parse_algebra_section(const std::string& sec) {
    check_keys(sec, {"builtin", "basis", "unit", "mul"});
    if (auto b = get(sec, "builtin")) {
      auto a = builtin_algebra(*b, line_of(sec, "builtin"));
      return a ? *a : FinDimAlgebra();
    }
    auto a = custom_algebra(sec);
    return a ? *a : FinDimAlgebra();
  }

  ModuleAlgebraAction parse_action(const HopfAlgebra& h, const FinDimAlgebra& a) {
    const std::string sec = "action";
    check_keys(sec, {"act"});
    std::vector<Matrix> mats;
    for (int g = 0; g < h.dim(); ++g) mats.push_back(Matrix::identity(field_, a.dim()).scaled(h.counit()[g]));
    for (auto& [l, args] : entries(sec, "act")) {
      if (args.size() != 2) {
        error(l.no, "act key must be 'act <gamma> <a>'");
        continue;
      }
      int g = -1, x = -1;
      for (int i = 0; i < h.dim(); ++i)
        if (h.algebra().label(i) == args[0]) g = i;
      for (int i = 0; i < a.dim(); ++i)
        if (a.label(i) == args[1]) x = i;
      if (g < 0 || x < 0) {
        error(l.no, "unknown basis element in '" + l.key + "'");
        continue;
      }
      if (auto v = expr(a.labels(), l.value, l.no)) mats[g].set_col(x, v->to_dense(static_cast<std::size_t>(a.dim())));
    }
    return ModuleAlgebraAction{h, a, mats};
  }

  /// chi entries on A (unit -> 1, other basis elements -> 0 unless given).
  Vec character(const std::string& sec, const FinDimAlgebra& a) {
    Vec chi(static_cast<std::size_t>(a.dim()), field_.zero());
    if (a.unit_index() >= 0) chi[a.unit_index()] = field_.one();
    for (auto& [l, args] : entries(sec, "chi")) {
      int x = -1;
      for (int i = 0; i < a.dim(); ++i)
        if (args.size() == 1 && a.label(i) == args[0]) x = i;
      if (x < 0) {
        error(l.no, "chi key must name a basis element of A");
        continue;
      }
      if (auto v = scalar(l.value, l.no)) chi[x] = *v;
    }
    return chi;
  }

  AlgebraExtension parse_extension(const ModuleAlgebraAction& act) {
    const std::string sec = "extension";
    check_keys(sec, {"kind", "chi", "basis", "unit", "mul", "map"});
    FinDimAlgebra r = smash_product(act);
    std::string kind = get(sec, "kind").value_or("identity");
    AlgebraExtension ext;
    if (kind == "identity") {
      ext = identity_extension(r);
    } else if (kind == "character") {
      Vec chi = character(sec, act.algebra);
      Vec eps(static_cast<std::size_t>(r.dim()));
      int dg = act.hopf.dim();
      for (int x = 0; x < act.algebra.dim(); ++x)
        for (int g = 0; g < dg; ++g) eps[x * dg + g] = chi[x] * act.hopf.counit()[g];
      ext = character_extension(r, eps);
    } else if (kind == "algebra") {
      auto b = custom_algebra(sec);
      if (!b) return {};
      Matrix map(field_, b->dim(), r.dim());
      std::vector<char> have(static_cast<std::size_t>(r.dim()));
      int dg = act.hopf.dim();
      for (auto& [l, args] : entries(sec, "map")) {
        int idx = -1;
        for (int x = 0; x < act.algebra.dim(); ++x)
          for (int g = 0; g < dg; ++g)
            if (args.size() == 1 && args[0] == act.algebra.label(x) + "#" + act.hopf.algebra().label(g)) idx = x * dg + g;
        if (idx < 0) {
          error(l.no, "map key must be '<a>#<gamma>'");
          continue;
        }
        if (auto v = expr(b->labels(), l.value, l.no)) map.set_col(idx, v->to_dense(static_cast<std::size_t>(b->dim()))), have[idx] = 1;
      }
      for (int i = 0; i < r.dim(); ++i)
        if (!have[i]) error(line_of(sec, "kind"), "missing map of the smash basis element " + std::to_string(i));
      if (!errors_.empty()) return {};
      ext = AlgebraExtension{r, *b, map};
    } else {
      error(line_of(sec, "kind"), "extension kind must be 'identity', 'character' or 'algebra'");
      return {};
    }
    auto bad = validate_extension(ext);
    if (!bad.empty()) {
      for (auto& v : bad) v = "extension: " + v;
      throw ValidationError("invalid job " + name_, bad);
    }
    return ext;
  }

  std::optional<Matrix> matrix(const std::string& text, int dim, int line) {
    Matrix m(field_, dim, dim);
    std::vector<std::string> rows;
    std::string cur;
    for (char c : text) {
      if (c == ';') {
        rows.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    rows.push_back(cur);
    if (static_cast<int>(rows.size()) != dim) {
      error(line, "matrix needs " + std::to_string(dim) + " rows separated by ';'");
      return std::nullopt;
    }
    for (int r = 0; r < dim; ++r) {
      auto w = words(rows[r]);
      if (static_cast<int>(w.size()) != dim) {
        error(line, "matrix row " + std::to_string(r + 1) + " needs " + std::to_string(dim) + " entries");
        return std::nullopt;
      }
      for (int c = 0; c < dim; ++c) {
        auto v = scalar(w[c], line);
        if (!v) return std::nullopt;
        m.set(r, c, *v);
      }
    }
    return m;
  }

  SmashModule parse_module(const ModuleAlgebraAction& act) {
    const std::string sec = "module";
    check_keys(sec, {"kind", "chi", "dim", "a", "g"});
    std::string kind = get(sec, "kind").value_or("trivial");
    try {
      if (kind == "trivial") return character_module(act, character(sec, act.algebra));
      if (kind == "regular") return regular_module(act);
      if (kind == "algebra") {
        std::vector<Matrix> left;
        for (int i = 0; i < act.algebra.dim(); ++i) left.push_back(act.algebra.left_mult(i));
        return smash_module(act, left, act.act);
      }
      if (kind == "matrices") {
        auto dim = get_int(sec, "dim");
        if (!dim || *dim < 1) {
          error(line_of(sec, "kind"), "kind matrices needs 'dim' >= 1");
          fail_if_errors();
        }
        auto fill = [&](const std::string& head, const FinDimAlgebra& alg) {
          std::vector<std::optional<Matrix>> out(static_cast<std::size_t>(alg.dim()));
          if (alg.unit_index() >= 0) out[alg.unit_index()] = Matrix::identity(field_, *dim);
          for (auto& [l, args] : entries(sec, head)) {
            int x = -1;
            for (int i = 0; i < alg.dim(); ++i)
              if (args.size() == 1 && alg.label(i) == args[0]) x = i;
            if (x < 0) {
              error(l.no, "unknown basis element in '" + l.key + "'");
              continue;
            }
            out[x] = matrix(l.value, *dim, l.no);
          }
          std::vector<Matrix> mats;
          for (int i = 0; i < alg.dim(); ++i) {
            if (!out[i]) {
              error(line_of(sec, "kind"), "missing action matrix '" + head + " " + alg.label(i) + "'");
              continue;
            }
            mats.push_back(*out[i]);
          }
          return mats;
        };
        auto ma = fill("a", act.algebra);
        auto mg = fill("g", act.hopf.algebra());
        fail_if_errors();
        return smash_module(act, ma, mg);
      }
    } catch (const ValidationError& e) {
      std::vector<std::string> bad;
      for (const auto& v : e.violations()) bad.push_back("module: " + v);
      throw ValidationError("invalid job " + name_, bad);
    }
    error(line_of(sec, "kind"), "module kind must be 'trivial', 'regular', 'algebra' or 'matrices'");
    fail_if_errors();
    return {};
  }

  LHSInput parse_lhs() {
    const std::string sec = "lhs";
    check_keys(sec, {"n", "g", "act"});
    auto n = get(sec, "n"), g = get(sec, "g");
    if (!n || !g) {
      error(0, "[lhs] needs 'n' and 'g'");
      fail_if_errors();
    }
    auto gn = group_descriptor(*n, line_of(sec, "n"));
    auto gg = group_descriptor(*g, line_of(sec, "g"));
    fail_if_errors();
    GroupAction act;
    for (int i = 0; i < gg->order(); ++i) {
      std::vector<int> id(static_cast<std::size_t>(gn->order()));
      for (int j = 0; j < gn->order(); ++j) id[j] = j;
      act.perm.push_back(id);
    }
    for (auto& [l, args] : entries(sec, "act")) {
      int x = -1;
      for (int i = 0; i < gg->order(); ++i)
        if (args.size() == 1 && gg->label(i) == args[0]) x = i;
      if (x < 0) {
        error(l.no, "act key must name an element of g");
        continue;
      }
      auto imgs = words(l.value);
      if (static_cast<int>(imgs.size()) != gn->order()) {
        error(l.no, "act must list the image of every element of n");
        continue;
      }
      for (int j = 0; j < gn->order(); ++j) {
        int y = -1;
        for (int i = 0; i < gn->order(); ++i)
          if (gn->label(i) == imgs[j]) y = i;
        if (y < 0) error(l.no, "unknown element '" + imgs[j] + "' of n");
        act.perm[x][j] = y;
      }
    }
    fail_if_errors();
    try {
      validate_group_action(*gn, *gg, act);
    } catch (const NotAnAction& e) {
      throw ValidationError("invalid job " + name_, {std::string("lhs: ") + e.what()});
    }
    return {*gn, *gg, act};
  }

  std::string name_;
  Field field_;
  std::map<std::string, std::vector<Line>> sections_;
  std::vector<std::string> errors_;
};

}  // namespace

JobSpec parse_job_text(const std::string& text, const std::string& name, const JobOverrides& over) {
  Parser p(name);
  p.read(text);
  return p.build(over);
}

JobSpec parse_job(const std::string& path, const JobOverrides& over) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, {"cannot open file '" + path + "'"});
  std::stringstream ss;
  ss << in.rdbuf();
  std::string name = path.substr(path.find_last_of('/') + 1);
  return parse_job_text(ss.str(), name, over);
}

}  // namespace smashcoh
