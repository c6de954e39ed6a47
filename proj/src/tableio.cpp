#include "cartan/tableio.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace cartan {

namespace {
constexpr int kFormatVersion = 1;

struct ImportError : std::runtime_error {
  explicit ImportError(const std::string& m) : std::runtime_error("table import: " + m) {}
};

}  // namespace

void export_table(std::ostream& os, const AlgebraTable& t) {
  os << "algebratable " << kFormatVersion << "\n";
  os << "family " << t.family << "\n";
  os << "n " << t.n << "\n";
  os << "dim " << t.dim << "\n";
  os << "scope " << (t.theorem_scope ? 1 : 0) << "\n";
  os << "modulus " << (t.grading_modulus ? *t.grading_modulus : 0) << "\n";
  os << "rank " << t.rank() << "\n";
  os << "top " << t.top_degree << "\n";
  os << "cartan";
  for (int i : t.cartan) os << " " << i;
  os << "\n";
  os << "parity";
  for (int p : t.parity) os << " " << p;
  os << "\n";
  os << "degree";
  for (int d : t.zdegree) os << " " << d;
  os << "\n";
  for (int k = 0; k < t.dim; ++k) {
    os << "weight";
    for (const auto& w : t.weights[k])
      os << " " << w.get_num().get_str() << " " << w.get_den().get_str();
    os << "\n";
  }
  for (int a = 0; a < t.dim; ++a)
    for (int b = 0; b < t.dim; ++b)
      for (const auto& [k, c] : t.bracket(a, b))
        os << "c " << a << " " << b << " " << k << " " << c.get_num().get_str() << " "
           << c.get_den().get_str() << "\n";
  os << "end\n";
}

std::string export_table_string(const AlgebraTable& t) {
  std::ostringstream os;
  export_table(os, t);
  return os.str();
}

AlgebraTable import_table(std::istream& is) {
  AlgebraTable t;
  std::string line, word;

  if (!std::getline(is, line)) throw ImportError("empty input");
  {
    std::istringstream ls(line);
    int version = -1;
    ls >> word >> version;
    if (word != "algebratable" || version != kFormatVersion)
      throw ImportError("bad magic or version");
  }
  int modulus = 0, rank = 0;
  int weights_seen = 0;
  bool ended = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    ls >> word;
    if (word == "family") ls >> t.family;
    else if (word == "n") ls >> t.n;
    else if (word == "dim") {
      ls >> t.dim;
      if (t.dim <= 0 || t.dim > 100000) throw ImportError("bad dimension");
      t.sc.assign(std::size_t(t.dim) * t.dim, {});
    } else if (word == "scope") {
      int s = 1;
      ls >> s;
      t.theorem_scope = s != 0;
    } else if (word == "modulus") {
      ls >> modulus;
      if (modulus > 0) t.grading_modulus = modulus;
    } else if (word == "rank") ls >> rank;
    else if (word == "top") ls >> t.top_degree;
    else if (word == "cartan") {
      int i;
      while (ls >> i) t.cartan.push_back(i);
    } else if (word == "parity") {
      int p;
      while (ls >> p) t.parity.push_back(p);
    } else if (word == "degree") {
      int d;
      while (ls >> d) t.zdegree.push_back(d);
    } else if (word == "weight") {
      Weight w;
      std::string num, den;
      while (ls >> num >> den) {
        Rational q{mpz_class(num), mpz_class(den)};
        q.canonicalize();
        w.push_back(q);
      }
      if (int(w.size()) != rank) throw ImportError("weight tuple width mismatch");
      t.weights.push_back(std::move(w));
      ++weights_seen;
    } else if (word == "c") {
      int a, b, k;
      std::string num, den;
      if (!(ls >> a >> b >> k >> num >> den)) throw ImportError("bad constant record");
      if (t.dim == 0) throw ImportError("constant record before dimension");
      if (a < 0 || b < 0 || k < 0 || a >= t.dim || b >= t.dim || k >= t.dim)
        throw ImportError("constant record index out of range");
      Rational q{mpz_class(num), mpz_class(den)};
      q.canonicalize();
      if (!is_zero(q)) t.sc[std::size_t(a) * t.dim + b].emplace_back(k, q);
    } else if (word == "end") {
      ended = true;
      break;
    } else throw ImportError("unknown record " + word);
  }
  if (!ended) throw ImportError("missing end record");
  if (int(t.parity.size()) != t.dim || int(t.zdegree.size()) != t.dim ||
      weights_seen != t.dim)
    throw ImportError("vector lengths disagree with dimension");
  for (int i : t.cartan)
    if (i < 0 || i >= t.dim) throw ImportError("cartan index out of range");
  for (int p : t.parity)
    if (p != 0 && p != 1) throw ImportError("parity entries must be 0 or 1");
  return t;
}

AlgebraTable import_table_string(const std::string& s) {
  std::istringstream is(s);
  return import_table(is);
}

}  // namespace cartan
