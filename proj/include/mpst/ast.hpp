#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mpst {

using Participant = std::string;
using Label = std::string;

// ---------------------------------------------------------------------------
// Values
// ---------------------------------------------------------------------------

struct NatLit {
  std::uint64_t value = 0;
};
struct BoolLit {
  bool value = false;
};
struct VarRef {
  std::string name;
};

using Value = std::variant<NatLit, BoolLit, VarRef>;

inline bool operator==(const NatLit& a, const NatLit& b) { return a.value == b.value; }
inline bool operator==(const BoolLit& a, const BoolLit& b) { return a.value == b.value; }
inline bool operator==(const VarRef& a, const VarRef& b) { return a.name == b.name; }

inline bool is_ground(const Value& v) { return !std::holds_alternative<VarRef>(v); }

inline Value nat(std::uint64_t n) { return NatLit{n}; }
inline Value boolean(bool b) { return BoolLit{b}; }
inline Value var(std::string name) { return VarRef{std::move(name)}; }

// ---------------------------------------------------------------------------
// Processes
// ---------------------------------------------------------------------------

struct Process;
using ProcessPtr = std::shared_ptr<const Process>;

struct InBranch {
  Participant peer;
  Label label;
  std::string binder;
  ProcessPtr cont;
};

struct OutBranch {
  Participant peer;
  Label label;
  Value payload;
  ProcessPtr cont;
};

struct Inact {};
struct ExtChoice {
  std::vector<InBranch> branches;
};
struct IntChoice {
  std::vector<OutBranch> branches;
};
struct Cond {
  Value cond;
  ProcessPtr if_true;
  ProcessPtr if_false;
};
struct Rec {
  std::string var;
  ProcessPtr body;
};
struct PVar {
  std::string name;
};

struct Process {
  std::variant<Inact, ExtChoice, IntChoice, Cond, Rec, PVar> node;
};

namespace proc {
inline ProcessPtr make(Process p) { return std::make_shared<const Process>(std::move(p)); }
inline ProcessPtr inact() {
  static const ProcessPtr p = make(Process{Inact{}});
  return p;
}
inline ProcessPtr ext(std::vector<InBranch> bs) { return make(Process{ExtChoice{std::move(bs)}}); }
inline ProcessPtr intc(std::vector<OutBranch> bs) { return make(Process{IntChoice{std::move(bs)}}); }
inline ProcessPtr cond(Value v, ProcessPtr t, ProcessPtr f) {
  return make(Process{Cond{std::move(v), std::move(t), std::move(f)}});
}
inline ProcessPtr rec(std::string x, ProcessPtr body) {
  return make(Process{Rec{std::move(x), std::move(body)}});
}
inline ProcessPtr pvar(std::string x) { return make(Process{PVar{std::move(x)}}); }
// single input/output prefix, i.e. a unary choice
inline ProcessPtr in(Participant p, Label l, std::string x, ProcessPtr k) {
  return ext({InBranch{std::move(p), std::move(l), std::move(x), std::move(k)}});
}
inline ProcessPtr out(Participant p, Label l, Value v, ProcessPtr k) {
  return intc({OutBranch{std::move(p), std::move(l), std::move(v), std::move(k)}});
}
}  // namespace proc

// ---------------------------------------------------------------------------
// Queues and sessions
// ---------------------------------------------------------------------------

struct QueuedMsg {
  Participant receiver;
  Label label;
  Value payload;
};
inline bool operator==(const QueuedMsg& a, const QueuedMsg& b) {
  return a.receiver == b.receiver && a.label == b.label && a.payload == b.payload;
}

using Queue = std::vector<QueuedMsg>;

struct Endpoint {
  ProcessPtr process;
  Queue queue;
};

// Participants are kept sorted by name; names are unique.
struct Session {
  std::vector<std::pair<Participant, Endpoint>> parts;

  const Endpoint* find(const Participant& p) const {
    for (const auto& [name, ep] : parts)
      if (name == p) return &ep;
    return nullptr;
  }
  Endpoint* find(const Participant& p) {
    for (auto& [name, ep] : parts)
      if (name == p) return &ep;
    return nullptr;
  }
  void add(Participant p, Endpoint ep);
};

// ---------------------------------------------------------------------------
// Sorts, session types, queue types, environments
// ---------------------------------------------------------------------------

enum class Sort { Nat, Bool };

inline const char* sort_name(Sort s) { return s == Sort::Nat ? "nat" : "bool"; }

struct TypeNode;
using TypePtr = std::shared_ptr<const TypeNode>;

struct TypeBranch {
  Participant peer;
  Label label;
  Sort sort;
  TypePtr cont;
};

struct EndT {};
struct ExtT {
  std::vector<TypeBranch> branches;
};
struct IntT {
  std::vector<TypeBranch> branches;
};
struct RecT {
  std::string var;
  TypePtr body;
};
struct TVar {
  std::string name;
};

struct TypeNode {
  std::variant<EndT, ExtT, IntT, RecT, TVar> node;
};

namespace ty {
inline TypePtr make(TypeNode t) { return std::make_shared<const TypeNode>(std::move(t)); }
inline TypePtr end() {
  static const TypePtr t = make(TypeNode{EndT{}});
  return t;
}
inline TypePtr ext(std::vector<TypeBranch> bs) { return make(TypeNode{ExtT{std::move(bs)}}); }
inline TypePtr intc(std::vector<TypeBranch> bs) { return make(TypeNode{IntT{std::move(bs)}}); }
inline TypePtr rec(std::string v, TypePtr body) {
  return make(TypeNode{RecT{std::move(v), std::move(body)}});
}
inline TypePtr tvar(std::string v) { return make(TypeNode{TVar{std::move(v)}}); }
inline TypePtr in(Participant p, Label l, Sort s, TypePtr k) {
  return ext({TypeBranch{std::move(p), std::move(l), s, std::move(k)}});
}
inline TypePtr out(Participant p, Label l, Sort s, TypePtr k) {
  return intc({TypeBranch{std::move(p), std::move(l), s, std::move(k)}});
}
}  // namespace ty

struct QueueEntryT {
  Participant receiver;
  Label label;
  Sort sort;
};
inline bool operator==(const QueueEntryT& a, const QueueEntryT& b) {
  return a.receiver == b.receiver && a.label == b.label && a.sort == b.sort;
}

using QueueType = std::vector<QueueEntryT>;

struct EnvEntry {
  QueueType queue_type;
  TypePtr type;
};

// Bindings are kept sorted by participant name; names are unique.
struct TypingEnv {
  std::vector<std::pair<Participant, EnvEntry>> bindings;

  const EnvEntry* find(const Participant& p) const {
    for (const auto& [name, e] : bindings)
      if (name == p) return &e;
    return nullptr;
  }
  EnvEntry* find(const Participant& p) {
    for (auto& [name, e] : bindings)
      if (name == p) return &e;
    return nullptr;
  }
  void add(Participant p, EnvEntry e);
};

// Shared typing environment (Theta): sorts for value variables, session types
// for process variables.
struct SharedEnv {
  std::map<std::string, Sort> value_vars;
  std::map<std::string, TypePtr> process_vars;
};

}  // namespace mpst
