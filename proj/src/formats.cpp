#include "mlv/formats.hpp"

#include <fstream>
#include <sstream>

namespace mlv {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

BitVector parse_bits(std::size_t line_no, const std::string& s, std::size_t expected_n) {
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw ParseError(line_no, std::string("expected a 0/1 string, found '") + c + "'");
    }
  }
  if (expected_n != 0 && s.size() != expected_n) {
    throw ParseError(line_no, "row length " + std::to_string(s.size()) + " does not match n = " +
                                  std::to_string(expected_n));
  }
  return BitVector::from_string(s);
}

}  // namespace

SelfDualCssCode parse_code_file(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  std::string name;
  std::size_t n = 0;
  std::vector<BitVector> h_rows, rep_rows;
  std::vector<BasisPair> basis_pairs;
  enum class Section { None, H, Reps, Basis } section = Section::None;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("name:", 0) == 0) {
      name = trim(line.substr(5));
      section = Section::None;
    } else if (line.rfind("n:", 0) == 0) {
      try {
        n = std::stoul(trim(line.substr(2)));
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad qubit count '" + trim(line.substr(2)) + "'");
      }
      section = Section::None;
    } else if (line == "H:") {
      section = Section::H;
    } else if (line == "coset_reps:") {
      section = Section::Reps;
    } else if (line == "basis:") {
      section = Section::Basis;
    } else if (section == Section::H) {
      h_rows.push_back(parse_bits(line_no, line, n));
    } else if (section == Section::Reps) {
      rep_rows.push_back(parse_bits(line_no, line, n));
    } else if (section == Section::Basis) {
      std::istringstream fields(line);
      std::string xtag, xbits, ztag, zbits;
      if (!(fields >> xtag >> xbits >> ztag >> zbits) || xtag != "X:" || ztag != "Z:") {
        throw ParseError(line_no, "expected 'X: <bits> Z: <bits>'");
      }
      basis_pairs.push_back(
          {parse_bits(line_no, xbits, n), parse_bits(line_no, zbits, n)});
    } else {
      throw ParseError(line_no, "unexpected content outside any section: '" + line + "'");
    }
  }
  if (n == 0) throw ParseError(line_no, "missing 'n:' field");
  if (h_rows.empty()) throw ParseError(line_no, "missing 'H:' section");

  SelfDualCssCode code = SelfDualCssCode::from_check_matrix(
      BitMatrix(h_rows),
      rep_rows.empty() ? std::nullopt : std::optional<BitMatrix>(BitMatrix(rep_rows)));
  if (!name.empty()) code.set_name(name);
  if (!basis_pairs.empty()) code.set_reference_basis(std::move(basis_pairs));
  return code;
}

std::string serialize_code(const SelfDualCssCode& code) {
  std::ostringstream out;
  if (!code.name().empty()) out << "name: " << code.name() << "\n";
  out << "n: " << code.n() << "\n";
  out << "H:\n";
  for (const auto& row : code.check_matrix().rows()) out << row.to_string() << "\n";
  out << "coset_reps:\n";
  for (const auto& rep : code.coset_reps().rows()) out << rep.to_string() << "\n";
  if (code.reference_basis()) {
    out << "basis:\n";
    for (const auto& pair : *code.reference_basis()) {
      out << "X: " << pair.x.to_string() << " Z: " << pair.z.to_string() << "\n";
    }
  }
  return out.str();
}

SymplecticBasis parse_basis_file(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  std::vector<BasisPair> pairs;
  std::vector<PairClass> structure;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string xtag, xbits, ztag, zbits, ctag, cls;
    if (!(fields >> xtag >> xbits >> ztag >> zbits >> ctag >> cls) || xtag != "X:" ||
        ztag != "Z:" || ctag != "class:") {
      throw ParseError(line_no, "expected 'X: <bits> Z: <bits> class: matched|crossed(j)'");
    }
    pairs.push_back({parse_bits(line_no, xbits, 0), parse_bits(line_no, zbits, 0)});
    if (cls == "matched") {
      structure.push_back(PairClass{true, 0});
    } else if (cls.rfind("crossed(", 0) == 0 && cls.back() == ')') {
      std::size_t partner = 0;
      try {
        partner = std::stoul(cls.substr(8, cls.size() - 9));
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad partner index in '" + cls + "'");
      }
      if (partner < 1) throw ParseError(line_no, "partner index is 1-based");
      structure.push_back(PairClass{false, partner - 1});
    } else {
      throw ParseError(line_no, "unknown class '" + cls + "'");
    }
  }
  SymplecticBasis basis;
  basis.pairs = std::move(pairs);
  basis.structure = std::move(structure);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (!basis.structure[j].matched && basis.structure[j].partner >= basis.size()) {
      throw ParseError(line_no, "pair " + std::to_string(j + 1) + " names a partner out of range");
    }
  }
  return basis;
}

std::string serialize_basis(const SymplecticBasis& basis) {
  std::ostringstream out;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    out << "X: " << basis.pairs[j].x.to_string() << "  Z: " << basis.pairs[j].z.to_string()
        << "  class: ";
    if (basis.structure[j].matched) {
      out << "matched";
    } else {
      out << "crossed(" << basis.structure[j].partner + 1 << ")";
    }
    out << "\n";
  }
  return out.str();
}

SelfDualCssCode resolve_code_reference(const std::string& ref) {
  std::string r = trim(ref);
  if (r == "qhamming15" || r == "c422" || r == "c622" || r == "steane7") {
    return SelfDualCssCode::builtin(r);
  }
  if (r.rfind("hamming", 0) == 0 && r.size() > 7 &&
      r.find_first_not_of("0123456789", 7) == std::string::npos) {
    return SelfDualCssCode::hamming_code(std::stoi(r.substr(7)));
  }
  return parse_code_file(read_file(r));
}

std::vector<SelfDualCssCode> parse_concat_spec(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::vector<SelfDualCssCode> codes;
  while (std::getline(in, raw)) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    codes.push_back(resolve_code_reference(line));
  }
  if (codes.empty()) throw ValidationError("concat spec: no code references found");
  return codes;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << text;
}

}  // namespace mlv
