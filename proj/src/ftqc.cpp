#include "mlv/ftqc.hpp"

#include <deque>
#include <map>
#include <sstream>

namespace mlv {

std::string move_name(LogicalMove m) {
  switch (m) {
    case LogicalMove::H: return "H^k";
    case LogicalMove::S: return "S^k";
    case LogicalMove::Sdg: return "S†^k";
  }
  return "?";
}

MeasurementTarget MeasurementTarget::from_operator(PauliOperator p) {
  if (p.x.is_zero() && p.z.is_zero()) {
    throw ValidationError("measurement target: identity operator");
  }
  if (!p.is_hermitian()) {
    throw ValidationError("measurement target: operator is not hermitian");
  }
  return MeasurementTarget{std::move(p)};
}

MeasurementTarget MeasurementTarget::parse(std::size_t k, const std::string& label) {
  PauliOperator op = PauliOperator::identity(k);
  std::istringstream in(label);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 'X' && tok[0] != 'Y' && tok[0] != 'Z')) {
      throw ValidationError("measurement target: bad token '" + tok +
                            "' (expected X<i>, Y<i>, or Z<i>)");
    }
    std::size_t idx = 0;
    try {
      idx = std::stoul(tok.substr(1));
    } catch (const std::exception&) {
      throw ValidationError("measurement target: bad qubit index in '" + tok + "'");
    }
    if (idx < 1 || idx > k) {
      throw ValidationError("measurement target: qubit index out of range in '" + tok + "'");
    }
    Gate which = tok[0] == 'X' ? Gate::X : (tok[0] == 'Y' ? Gate::Y : Gate::Z);
    op = pauli_multiply(op, PauliOperator::single(k, idx - 1, which));
  }
  return from_operator(std::move(op));
}

std::string MeasurementTarget::label() const {
  // Sign relative to the +1 product of Y/X/Z factors: each Y contributes one
  // factor of i in canonical form.
  int ys = static_cast<int>((op.x & op.z).weight());
  std::string out;
  if (((op.phase - ys) % 4 + 4) % 4 == 2) out = "-";
  for (std::size_t i = 0; i < op.size(); ++i) {
    bool xb = op.x.get(i), zb = op.z.get(i);
    if (!xb && !zb) continue;
    if (!out.empty() && out != "-") out.push_back(' ');
    out.push_back(xb && zb ? 'Y' : (xb ? 'X' : 'Z'));
    out += std::to_string(i + 1);
  }
  return out;
}

MeasurementTarget convert_measurement(const MeasurementTarget& p,
                                      const std::vector<LogicalMove>& word) {
  PauliOperator cur = p.op;
  std::size_t k = cur.size();
  for (LogicalMove m : word) {
    Gate g = m == LogicalMove::H ? Gate::H : (m == LogicalMove::S ? Gate::S : Gate::Sdg);
    cur = conjugate_by_layer(cur, TransversalLayer::uniform(k, g));
  }
  return MeasurementTarget{cur};
}

std::optional<std::vector<LogicalMove>> conversion_chain(const MeasurementTarget& source,
                                                         const MeasurementTarget& target,
                                                         std::size_t max_depth) {
  auto key = [](const PauliOperator& p) { return p.x.to_string() + "|" + p.z.to_string(); };
  using Key = std::string;
  Key goal = key(target.op);
  if (key(source.op) == goal) return std::vector<LogicalMove>{};

  std::map<Key, std::vector<LogicalMove>> visited;
  std::deque<std::pair<PauliOperator, std::vector<LogicalMove>>> frontier;
  visited[key(source.op)] = {};
  frontier.emplace_back(source.op, std::vector<LogicalMove>{});
  while (!frontier.empty()) {
    auto [cur, word] = frontier.front();
    frontier.pop_front();
    if (word.size() >= max_depth) continue;
    for (LogicalMove m : {LogicalMove::H, LogicalMove::S}) {
      Gate g = m == LogicalMove::H ? Gate::H : Gate::S;
      PauliOperator next = conjugate_by_layer(cur, TransversalLayer::uniform(cur.size(), g));
      std::vector<LogicalMove> next_word = word;
      next_word.push_back(m);
      if (key(next) == goal) return next_word;
      if (visited.emplace(key(next), next_word).second) {
        frontier.emplace_back(std::move(next), std::move(next_word));
      }
    }
  }
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> ancilla_classes(
    const std::vector<MeasurementTarget>& targets, std::size_t max_depth) {
  std::size_t n = targets.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (find(i) == find(j)) continue;
      if (conversion_chain(targets[i], targets[j], max_depth)) {
        parent[find(j)] = find(i);
      }
    }
  }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot[root])].push_back(i);
  }
  return classes;
}

std::string render_chain(const MeasurementTarget& source, const std::vector<LogicalMove>& word) {
  std::string out = source.label();
  MeasurementTarget cur = source;
  for (LogicalMove m : word) {
    cur = convert_measurement(cur, {m});
    out += " --[" + move_name(m) + "]--> " + cur.label();
  }
  return out;
}

}  // namespace mlv
