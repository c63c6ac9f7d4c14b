// Copyright 2026 The hoareopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hoareopt/circuit.hpp"

namespace hoareopt {
namespace {

bool valid_name(std::string_view s) {
    if (s.empty() || s == "true" || s == "false") return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char ch : s) {
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
    }
    return true;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

// Gate kind and control count implied by a mnemonic; controls < 0 means
// "all operands but the targets".
struct GateForm {
    GateKind gate;
    int controls;
};

std::optional<GateForm> gate_form(std::string_view m) {
    if (auto g = gate_from_base_name(m)) return GateForm{*g, 0};
    if (m == "cx") return GateForm{GateKind::X, 1};
    if (m == "ccx") return GateForm{GateKind::X, 2};
    if (m == "cswap") return GateForm{GateKind::Swap, 1};
    if (m.size() > 2 && m.substr(0, 2) == "mc") {
        if (auto g = gate_from_base_name(m.substr(2))) return GateForm{*g, -1};
    }
    return std::nullopt;
}

class TextParser {
  public:
    Circuit run(std::string_view text) {
        std::size_t line_no = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            ++line_no;
            line(text.substr(start, end - start), line_no);
            start = end + 1;
        }
        auto v = validate(c_);
        if (!v.empty()) {
            std::size_t ln = v[0].index < lines_.size() ? lines_[v[0].index] : 0;
            throw ParseError("line " + std::to_string(ln) + ": " + v[0].rule + " (" + v[0].detail + ")", ln);
        }
        return std::move(c_);
    }

  private:
    [[noreturn]] void fail(std::size_t ln, const std::string& msg) const {
        throw ParseError("line " + std::to_string(ln) + ": " + msg, ln);
    }

    QubitId resolve(std::string_view name, std::size_t ln) const {
        auto it = live_.find(std::string(name));
        if (it != live_.end()) return it->second;
        if (dead_.count(std::string(name))) fail(ln, "use-after-dealloc of qubit '" + std::string(name) + "'");
        fail(ln, "undeclared qubit '" + std::string(name) + "'");
    }

    void emit(Instruction ins, std::size_t ln) {
        c_.push_back(std::move(ins));
        lines_.push_back(ln);
    }

    void line(std::string_view raw, std::size_t ln) {
        std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        auto tok = split_ws(raw);
        if (tok.empty()) return;
        std::string_view kw = tok[0];

        if (kw == "assert") {
            std::size_t at = raw.find("assert") + 6;
            NameResolver resolver = [&](std::string_view n) -> std::optional<Var> {
                return Var{resolve(n, ln), 0};
            };
            try {
                emit(Instruction::make_assert(parse_condition(raw.substr(at), resolver)), ln);
            } catch (const ParseError& e) {
                if (e.line() == ln) throw;
                fail(ln, e.what());
            }
            return;
        }
        if (kw == "input" || kw == "alloc") {
            if (tok.size() != 2) fail(ln, std::string(kw) + " takes one qubit");
            std::string name(tok[1]);
            if (!valid_name(name)) fail(ln, "invalid qubit name '" + name + "'");
            if (live_.count(name)) fail(ln, "double-alloc of qubit '" + name + "'");
            QubitId q;
            if (kw == "input") {
                if (!c_.instructions().empty()) fail(ln, "input declared after the first instruction");
                q = c_.add_input(name);
            } else {
                q = c_.declare(name);
                emit(Instruction::alloc(q), ln);
            }
            live_[name] = q;
            dead_.erase(name);
            return;
        }
        if (kw == "dealloc" || kw == "measure") {
            if (tok.size() != 2) fail(ln, std::string(kw) + " takes one qubit");
            QubitId q = resolve(tok[1], ln);
            if (kw == "measure") {
                emit(Instruction::measure(q), ln);
            } else {
                emit(Instruction::dealloc(q), ln);
                live_.erase(std::string(tok[1]));
                dead_.insert(std::string(tok[1]));
            }
            return;
        }
        auto form = gate_form(kw);
        if (!form) fail(ln, "unknown instruction '" + std::string(kw) + "'");
        const std::size_t operands = tok.size() - 1;
        const std::size_t arity = std::size_t(gate_arity(form->gate));
        std::size_t controls;
        if (form->controls >= 0) {
            controls = std::size_t(form->controls);
            if (operands != controls + arity) {
                fail(ln, std::string(kw) + " takes " + std::to_string(controls + arity) + " qubits");
            }
        } else {
            if (operands < arity + 1) fail(ln, std::string(kw) + " needs at least one control");
            controls = operands - arity;
        }
        std::vector<QubitId> cs, ts;
        for (std::size_t i = 0; i < operands; ++i) {
            QubitId q = resolve(tok[i + 1], ln);
            (i < controls ? cs : ts).push_back(q);
        }
        emit(Instruction::make_gate(form->gate, std::move(cs), std::move(ts)), ln);
    }

    Circuit c_;
    std::unordered_map<std::string, QubitId> live_;
    std::set<std::string> dead_;
    std::vector<std::size_t> lines_;
};

}  // namespace

Circuit parse_circuit(std::string_view text) {
    TextParser p;
    return p.run(text);
}

std::string to_string(const Instruction& ins, const Circuit& c) {
    std::ostringstream os;
    switch (ins.op) {
        case OpKind::Alloc: os << "alloc " << c.name(ins.targets[0]); break;
        case OpKind::Dealloc: os << "dealloc " << c.name(ins.targets[0]); break;
        case OpKind::Measure: os << "measure " << c.name(ins.targets[0]); break;
        case OpKind::Assert:
            os << "assert " << to_string(ins.cond, [&](Var v) { return c.name(v.qubit); });
            break;
        case OpKind::Gate:
            os << mnemonic(ins.gate, ins.controls.size());
            for (QubitId q : ins.controls) os << ' ' << c.name(q);
            for (QubitId q : ins.targets) os << ' ' << c.name(q);
            break;
    }
    return os.str();
}

std::string serialize(const Circuit& c) {
    std::string out;
    for (QubitId q : c.inputs()) out += "input " + c.name(q) + "\n";
    for (const auto& ins : c.instructions()) out += to_string(ins, c) + "\n";
    return out;
}

}  // namespace hoareopt
