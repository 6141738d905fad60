#ifndef HTD_NETLIST_HPP
#define HTD_NETLIST_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "htd/errors.hpp"

namespace htd {

// Fixed 11-kind gate vocabulary. NONE is reserved for locality padding and
// never appears in a parsed netlist.
enum class GateKind : int {
    And = 0,
    Nand,
    Or,
    Nor,
    Xor,
    Xnor,
    Inv,
    Buf,
    Dff,
    Mux,
    None,
};

constexpr int kGateKindCount = 11;

std::string_view gate_kind_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
std::vector<std::string> gate_vocabulary();

using WireId = int;
using GateId = int;

struct Gate {
    GateId id = -1;
    GateKind kind = GateKind::None;
    std::string name;
    std::vector<WireId> inputs; // ordered as written
    WireId output = -1;

    bool operator==(const Gate&) const = default;
};

struct Netlist {
    std::string module_name;
    std::vector<std::string> port_order;  // header ports as written
    std::vector<std::string> wire_names;  // index = WireId
    std::vector<Gate> gates;              // index = GateId
    std::vector<WireId> primary_inputs;   // ascending
    std::vector<WireId> primary_outputs;  // ascending

    int wire_count() const { return static_cast<int>(wire_names.size()); }
    std::optional<WireId> find_wire(std::string_view name) const;
    const std::string& wire_name(WireId id) const { return wire_names[static_cast<std::size_t>(id)]; }

    bool operator==(const Netlist&) const = default;
};

// Folds cell names to the gate vocabulary. Unmapped cells are parse errors,
// never silently skipped.
class CellLibrary {
public:
    // Bare primitive names plus the usual fanin-suffixed aliases (and2, nand3, ...).
    static CellLibrary standard();

    void add_mapping(std::string cell, GateKind kind);
    // Lines of "<cell-name> <KIND>", '#' comments allowed.
    void load(std::string_view text);
    std::optional<GateKind> lookup(std::string_view cell) const;

private:
    std::unordered_map<std::string, GateKind> map_;
};

// Parses the restricted structural netlist grammar:
//   module <name>(<port>, ...);
//   input|output|wire <name>, ...;
//   <cell> <instance>(<output>, <input>, ...);
//   endmodule
// Wire ids: header ports classified as inputs first (header order), then
// body declarations in first-appearance order, then remaining header ports.
// Gate ids follow instantiation order.
Netlist parse_netlist(std::string_view text, const CellLibrary& cells = CellLibrary::standard());

// Canonical text form; reparsing it yields a structurally identical Netlist.
std::string pretty_print(const Netlist& netlist);

enum class Label : unsigned char { NonTrojan = 0, Trojan = 1 };

// Total over all wires: wires absent from the label file are NonTrojan.
struct LabelMap {
    std::vector<Label> labels;

    int trojan_count() const;
    bool is_trojan(WireId id) const { return labels[static_cast<std::size_t>(id)] == Label::Trojan; }
};

// One Trojan wire name per line, '#' comments allowed.
LabelMap parse_labels(std::string_view text, const Netlist& netlist);

struct NetlistStats {
    std::array<int, kGateKindCount> gate_counts{};
    int wires = 0;
    int gates = 0;
    int inputs = 0;
    int outputs = 0;
    std::optional<int> trojan_wires;
};

NetlistStats netlist_stats(const Netlist& netlist, const LabelMap* labels = nullptr);
std::string stats_to_json(const NetlistStats& stats);

} // namespace htd

#endif
