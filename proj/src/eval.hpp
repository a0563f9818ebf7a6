#pragma once

// Mask-based formula evaluation shared by the enumeration engines.
// Internal to the library.

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lpod/formula.hpp"

namespace lpod::detail {

using Mask = std::uint64_t;

struct AtomIndex {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> pos;

  static AtomIndex from(const std::vector<std::string>& names) {
    AtomIndex ix;
    ix.names = names;
    for (std::size_t i = 0; i < names.size(); ++i)
      ix.pos.emplace(names[i], static_cast<int>(i));
    return ix;
  }

  int at(const std::string& name) const {
    auto it = pos.find(name);
    return it == pos.end() ? -1 : it->second;
  }
};

struct ENode {
  Conn kind;
  int atom = -1;
  std::unique_ptr<ENode> lhs, rhs;
};

inline ENode compile(const FormulaPtr& f, const AtomIndex& ix) {
  ENode n;
  n.kind = f->kind;
  switch (f->kind) {
    case Conn::Bottom:
      break;
    case Conn::Atom:
      n.atom = ix.at(f->name);
      if (n.atom < 0)
        throw std::logic_error("atom '" + f->name + "' missing from signature");
      break;
    default:
      n.lhs = std::make_unique<ENode>(compile(f->lhs, ix));
      n.rhs = std::make_unique<ENode>(compile(f->rhs, ix));
  }
  return n;
}

inline bool ceval(const ENode& n, Mask t) {
  switch (n.kind) {
    case Conn::Bottom: return false;
    case Conn::Atom: return (t >> n.atom) & 1;
    case Conn::And: return ceval(*n.lhs, t) && ceval(*n.rhs, t);
    case Conn::Or:
    case Conn::OrderedOr: return ceval(*n.lhs, t) || ceval(*n.rhs, t);
    case Conn::Implies: return !ceval(*n.lhs, t) || ceval(*n.rhs, t);
  }
  return false;
}

// Satisfaction at <H,T>. Implication needs the classical check at T on top
// of the here-level one; F * G evaluates as F ; (~F & G) without expanding.
inline bool hteval(const ENode& n, Mask h, Mask t) {
  switch (n.kind) {
    case Conn::Bottom: return false;
    case Conn::Atom: return (h >> n.atom) & 1;
    case Conn::And: return hteval(*n.lhs, h, t) && hteval(*n.rhs, h, t);
    case Conn::Or: return hteval(*n.lhs, h, t) || hteval(*n.rhs, h, t);
    case Conn::OrderedOr:
      return hteval(*n.lhs, h, t) || (!ceval(*n.lhs, t) && hteval(*n.rhs, h, t));
    case Conn::Implies:
      if (ceval(*n.lhs, t) && !ceval(*n.rhs, t)) return false;
      return !hteval(*n.lhs, h, t) || hteval(*n.rhs, h, t);
  }
  return false;
}

inline Mask mask_of(const std::set<std::string>& m, const AtomIndex& ix) {
  Mask out = 0;
  for (const auto& name : m) {
    int i = ix.at(name);
    if (i >= 0) out |= Mask{1} << i;
  }
  return out;
}

inline std::set<std::string> model_of(Mask m, const AtomIndex& ix) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < ix.names.size(); ++i)
    if ((m >> i) & 1) out.insert(ix.names[i]);
  return out;
}

inline std::vector<ENode> compile_all(const std::vector<FormulaPtr>& fs,
                                      const AtomIndex& ix) {
  std::vector<ENode> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(compile(f, ix));
  return out;
}

inline bool ceval_all(const std::vector<ENode>& ns, Mask t) {
  for (const auto& n : ns)
    if (!ceval(n, t)) return false;
  return true;
}

inline bool hteval_all(const std::vector<ENode>& ns, Mask h, Mask t) {
  for (const auto& n : ns)
    if (!hteval(n, h, t)) return false;
  return true;
}

}  // namespace lpod::detail
