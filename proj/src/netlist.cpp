#include "htd/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace htd {

namespace {

constexpr std::array<std::string_view, kGateKindCount> kKindNames = {
    "AND", "NAND", "OR", "NOR", "XOR", "XNOR", "INV", "BUF", "DFF", "MUX", "NONE"};

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

struct Token {
    enum class Type { Ident, LParen, RParen, Comma, Semi, End };
    Type type = Type::End;
    std::string text;
    int line = 0;
    int col = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space_and_comments();
        Token tok;
        tok.line = line_;
        tok.col = col_;
        if (pos_ >= text_.size()) {
            tok.type = Token::Type::End;
            return tok;
        }
        char c = text_[pos_];
        switch (c) {
        case '(': tok.type = Token::Type::LParen; advance(); return tok;
        case ')': tok.type = Token::Type::RParen; advance(); return tok;
        case ',': tok.type = Token::Type::Comma; advance(); return tok;
        case ';': tok.type = Token::Type::Semi; advance(); return tok;
        default: break;
        }
        if (!is_ident_char(c))
            throw SyntaxError(std::string("unexpected character '") + c + "'", line_, col_);
        tok.type = Token::Type::Ident;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
            tok.text.push_back(text_[pos_]);
            advance();
        }
        return tok;
    }

private:
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$' || c == '[' ||
               c == ']' || c == '.' || c == '\\' || c == '/';
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
                advance();
                advance();
                while (pos_ + 1 < text_.size() && !(text_[pos_] == '*' && text_[pos_ + 1] == '/')) advance();
                if (pos_ + 1 >= text_.size())
                    throw SyntaxError("unterminated block comment", line_, col_);
                advance();
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

enum class DeclClass { Input, Output, Wire };

struct DeclItem {
    DeclClass cls;
    std::string name;
    int line;
    int col;
};

struct GateItem {
    std::string cell;
    std::string instance;
    std::vector<Token> pins;
    int line;
    int col;
};

int required_arity(GateKind kind) {
    switch (kind) {
    case GateKind::Inv:
    case GateKind::Buf:
    case GateKind::Dff: return 1;
    case GateKind::Mux: return 3;
    default: return -2; // at least 2
    }
}

} // namespace

std::string_view gate_kind_name(GateKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (int i = 0; i < kGateKindCount; ++i)
        if (upper == kKindNames[static_cast<std::size_t>(i)]) return static_cast<GateKind>(i);
    return std::nullopt;
}

std::vector<std::string> gate_vocabulary() {
    std::vector<std::string> v;
    v.reserve(kGateKindCount);
    for (auto name : kKindNames) v.emplace_back(name);
    return v;
}

std::optional<WireId> Netlist::find_wire(std::string_view name) const {
    for (std::size_t i = 0; i < wire_names.size(); ++i)
        if (wire_names[i] == name) return static_cast<WireId>(i);
    return std::nullopt;
}

CellLibrary CellLibrary::standard() {
    CellLibrary lib;
    struct Entry {
        const char* base;
        GateKind kind;
        bool arity_variants;
    };
    static const Entry entries[] = {
        {"and", GateKind::And, true},   {"nand", GateKind::Nand, true},
        {"or", GateKind::Or, true},     {"nor", GateKind::Nor, true},
        {"xor", GateKind::Xor, true},   {"xnor", GateKind::Xnor, true},
        {"inv", GateKind::Inv, false},  {"not", GateKind::Inv, false},
        {"buf", GateKind::Buf, false},  {"dff", GateKind::Dff, false},
        {"mux", GateKind::Mux, false},  {"mux2", GateKind::Mux, false},
    };
    for (const auto& e : entries) {
        lib.add_mapping(e.base, e.kind);
        if (e.arity_variants)
            for (int n = 2; n <= 8; ++n) lib.add_mapping(e.base + std::to_string(n), e.kind);
    }
    return lib;
}

void CellLibrary::add_mapping(std::string cell, GateKind kind) { map_[to_lower(cell)] = kind; }

void CellLibrary::load(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string cell, kind_name;
        if (!(ls >> cell)) continue;
        if (!(ls >> kind_name))
            throw SyntaxError("cell mapping line needs '<cell> <KIND>'", lineno, 0);
        auto kind = gate_kind_from_name(kind_name);
        if (!kind || *kind == GateKind::None)
            throw SyntaxError("unknown gate kind '" + kind_name + "' in cell mapping", lineno, 0);
        add_mapping(cell, *kind);
    }
}

std::optional<GateKind> CellLibrary::lookup(std::string_view cell) const {
    auto it = map_.find(to_lower(cell));
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

Netlist parse_netlist(std::string_view text, const CellLibrary& cells) {
    Lexer lex(text);

    auto expect = [&](Token::Type type, const char* what) {
        Token t = lex.next();
        if (t.type != type) throw SyntaxError(std::string("expected ") + what, t.line, t.col);
        return t;
    };

    Token t = lex.next();
    if (t.type != Token::Type::Ident || t.text != "module")
        throw SyntaxError("expected 'module'", t.line, t.col);
    Token name_tok = expect(Token::Type::Ident, "module name");

    Netlist netlist;
    netlist.module_name = name_tok.text;

    expect(Token::Type::LParen, "'('");
    Token port = lex.next();
    if (port.type == Token::Type::Ident) {
        netlist.port_order.push_back(port.text);
        for (;;) {
            Token sep = lex.next();
            if (sep.type == Token::Type::RParen) break;
            if (sep.type != Token::Type::Comma) throw SyntaxError("expected ',' or ')'", sep.line, sep.col);
            netlist.port_order.push_back(expect(Token::Type::Ident, "port name").text);
        }
    } else if (port.type != Token::Type::RParen) {
        throw SyntaxError("expected port list or ')'", port.line, port.col);
    }
    expect(Token::Type::Semi, "';'");

    std::vector<DeclItem> decls;
    std::vector<GateItem> gate_items;

    for (;;) {
        Token head = lex.next();
        if (head.type == Token::Type::End)
            throw SyntaxError("missing 'endmodule'", head.line, head.col);
        if (head.type != Token::Type::Ident)
            throw SyntaxError("expected declaration, instantiation, or 'endmodule'", head.line, head.col);
        if (head.text == "endmodule") break;
        if (head.text == "module")
            throw SyntaxError("only one module per netlist", head.line, head.col);

        if (head.text == "input" || head.text == "output" || head.text == "wire") {
            DeclClass cls = head.text == "input"    ? DeclClass::Input
                            : head.text == "output" ? DeclClass::Output
                                                    : DeclClass::Wire;
            for (;;) {
                Token ident = expect(Token::Type::Ident, "wire name");
                decls.push_back({cls, ident.text, ident.line, ident.col});
                Token sep = lex.next();
                if (sep.type == Token::Type::Semi) break;
                if (sep.type != Token::Type::Comma)
                    throw SyntaxError("expected ',' or ';'", sep.line, sep.col);
            }
            continue;
        }

        // gate instantiation: <cell> <instance>(<pins>);
        GateItem item;
        item.cell = head.text;
        item.line = head.line;
        item.col = head.col;
        item.instance = expect(Token::Type::Ident, "instance name").text;
        expect(Token::Type::LParen, "'('");
        for (;;) {
            Token pin = expect(Token::Type::Ident, "wire name");
            item.pins.push_back(pin);
            Token sep = lex.next();
            if (sep.type == Token::Type::RParen) break;
            if (sep.type != Token::Type::Comma)
                throw SyntaxError("expected ',' or ')'", sep.line, sep.col);
        }
        expect(Token::Type::Semi, "';'");
        gate_items.push_back(std::move(item));
    }

    Token trailing = lex.next();
    if (trailing.type != Token::Type::End)
        throw SyntaxError("unexpected text after 'endmodule'", trailing.line, trailing.col);

    // Resolve gate kinds and arities up front so errors carry gate positions.
    std::vector<GateKind> gate_kinds;
    gate_kinds.reserve(gate_items.size());
    for (const auto& g : gate_items) {
        auto kind = cells.lookup(g.cell);
        if (!kind)
            throw UnknownPrimitiveError("unknown primitive '" + g.cell + "'", g.line, g.col);
        int arity = static_cast<int>(g.pins.size()) - 1;
        int want = required_arity(*kind);
        if (want >= 0 ? arity != want : arity < -want)
            throw SyntaxError("'" + g.cell + "' expects " +
                                  (want >= 0 ? std::to_string(want) : "at least " + std::to_string(-want)) +
                                  " input(s), got " + std::to_string(arity),
                              g.line, g.col);
        gate_kinds.push_back(*kind);
    }

    // Explicit classification from declarations; header ports without one are
    // outputs when driven by some gate, inputs otherwise.
    std::unordered_map<std::string, DeclClass> explicit_class;
    for (const auto& d : decls) {
        if (d.cls == DeclClass::Wire) continue;
        bool is_port = std::find(netlist.port_order.begin(), netlist.port_order.end(), d.name) !=
                       netlist.port_order.end();
        if (!is_port)
            throw SyntaxError("'" + d.name + "' declared " +
                                  (d.cls == DeclClass::Input ? "input" : "output") +
                                  " but is not a module port",
                              d.line, d.col);
        auto [it, inserted] = explicit_class.emplace(d.name, d.cls);
        if (!inserted && it->second != d.cls)
            throw SyntaxError("'" + d.name + "' declared both input and output", d.line, d.col);
    }

    std::unordered_map<std::string, bool> driven;
    for (const auto& g : gate_items) driven[g.pins.front().text] = true;

    auto classify = [&](const std::string& port) {
        auto it = explicit_class.find(port);
        if (it != explicit_class.end()) return it->second;
        return driven.count(port) ? DeclClass::Output : DeclClass::Input;
    };

    std::unordered_map<std::string, WireId> wire_ids;
    auto register_wire = [&](const std::string& name) {
        if (wire_ids.count(name)) return;
        WireId id = static_cast<WireId>(netlist.wire_names.size());
        wire_ids.emplace(name, id);
        netlist.wire_names.push_back(name);
    };

    for (const auto& p : netlist.port_order)
        if (classify(p) == DeclClass::Input) register_wire(p);
    for (const auto& d : decls) register_wire(d.name);
    for (const auto& p : netlist.port_order) register_wire(p);

    for (const auto& p : netlist.port_order) {
        WireId id = wire_ids.at(p);
        if (classify(p) == DeclClass::Input)
            netlist.primary_inputs.push_back(id);
        else
            netlist.primary_outputs.push_back(id);
    }
    std::sort(netlist.primary_inputs.begin(), netlist.primary_inputs.end());
    std::sort(netlist.primary_outputs.begin(), netlist.primary_outputs.end());

    std::vector<GateId> driver_of(netlist.wire_names.size(), -1);
    for (std::size_t gi = 0; gi < gate_items.size(); ++gi) {
        const auto& g = gate_items[gi];
        Gate gate;
        gate.id = static_cast<GateId>(gi);
        gate.kind = gate_kinds[gi];
        gate.name = g.instance;
        for (std::size_t pi = 0; pi < g.pins.size(); ++pi) {
            const Token& pin = g.pins[pi];
            auto it = wire_ids.find(pin.text);
            if (it == wire_ids.end())
                throw UndeclaredWireError("undeclared wire '" + pin.text + "'", pin.line, pin.col);
            if (pi == 0) {
                gate.output = it->second;
                if (driver_of[static_cast<std::size_t>(it->second)] >= 0)
                    throw MultipleDriversError("wire '" + pin.text + "' has multiple drivers", pin.line,
                                               pin.col);
                driver_of[static_cast<std::size_t>(it->second)] = gate.id;
            } else {
                gate.inputs.push_back(it->second);
            }
        }
        netlist.gates.push_back(std::move(gate));
    }

    return netlist;
}

std::string pretty_print(const Netlist& netlist) {
    std::ostringstream out;
    out << "module " << netlist.module_name << "(";
    for (std::size_t i = 0; i < netlist.port_order.size(); ++i) {
        if (i) out << ", ";
        out << netlist.port_order[i];
    }
    out << ");\n";

    auto class_of = [&](WireId id) {
        if (std::binary_search(netlist.primary_inputs.begin(), netlist.primary_inputs.end(), id))
            return DeclClass::Input;
        if (std::binary_search(netlist.primary_outputs.begin(), netlist.primary_outputs.end(), id))
            return DeclClass::Output;
        return DeclClass::Wire;
    };

    // Declarations in wire-id order so reparsing reproduces id assignment.
    int n = netlist.wire_count();
    for (int i = 0; i < n;) {
        DeclClass cls = class_of(i);
        int j = i;
        while (j < n && class_of(j) == cls) ++j;
        out << "  "
            << (cls == DeclClass::Input ? "input" : cls == DeclClass::Output ? "output" : "wire");
        for (int k = i; k < j; ++k) out << (k == i ? " " : ", ") << netlist.wire_names[static_cast<std::size_t>(k)];
        out << ";\n";
        i = j;
    }

    for (const auto& g : netlist.gates) {
        out << "  " << to_lower(gate_kind_name(g.kind)) << " " << g.name << "("
            << netlist.wire_name(g.output);
        for (WireId in : g.inputs) out << ", " << netlist.wire_name(in);
        out << ");\n";
    }
    out << "endmodule\n";
    return out.str();
}

int LabelMap::trojan_count() const {
    int n = 0;
    for (Label l : labels)
        if (l == Label::Trojan) ++n;
    return n;
}

LabelMap parse_labels(std::string_view text, const Netlist& netlist) {
    LabelMap map;
    map.labels.assign(static_cast<std::size_t>(netlist.wire_count()), Label::NonTrojan);

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        std::string name = line.substr(begin, end - begin + 1);
        auto id = netlist.find_wire(name);
        if (!id) throw UnknownWireNameError("unknown wire name '" + name + "'", lineno, 0);
        map.labels[static_cast<std::size_t>(*id)] = Label::Trojan;
    }
    return map;
}

NetlistStats netlist_stats(const Netlist& netlist, const LabelMap* labels) {
    NetlistStats stats;
    stats.wires = netlist.wire_count();
    stats.gates = static_cast<int>(netlist.gates.size());
    stats.inputs = static_cast<int>(netlist.primary_inputs.size());
    stats.outputs = static_cast<int>(netlist.primary_outputs.size());
    for (const auto& g : netlist.gates) ++stats.gate_counts[static_cast<std::size_t>(g.kind)];
    if (labels) stats.trojan_wires = labels->trojan_count();
    return stats;
}

std::string stats_to_json(const NetlistStats& stats) {
    nlohmann::json counts = nlohmann::json::object();
    for (int i = 0; i < kGateKindCount; ++i)
        if (stats.gate_counts[static_cast<std::size_t>(i)] > 0)
            counts[std::string(gate_kind_name(static_cast<GateKind>(i)))] =
                stats.gate_counts[static_cast<std::size_t>(i)];
    nlohmann::json j{
        {"wires", stats.wires},       {"gates", stats.gates},   {"inputs", stats.inputs},
        {"outputs", stats.outputs},   {"gate_counts", counts},
    };
    if (stats.trojan_wires) j["trojan_wires"] = *stats.trojan_wires;
    return j.dump(2);
}

} // namespace htd
