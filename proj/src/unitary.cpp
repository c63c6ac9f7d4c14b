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

#include "hoareopt/unitary.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace hoareopt {
namespace {

using cd = std::complex<double>;

int bit_at(std::size_t index, int pos, int n) { return int((index >> (n - 1 - pos)) & 1U); }

int qubits_of(const Matrix& m) {
    int n = 0;
    while ((Eigen::Index(1) << n) < m.rows()) ++n;
    return n;
}

bool exposes_block_form(const Matrix& u, const std::set<int>& s, int n, double tol) {
    auto all_ones = [&](std::size_t idx) {
        for (int p : s) {
            if (!bit_at(idx, p, n)) return false;
        }
        return true;
    };
    const auto dim = std::size_t(u.rows());
    for (std::size_t j = 0; j < dim; ++j) {
        const bool fire_j = all_ones(j);
        for (std::size_t i = 0; i < dim; ++i) {
            const cd v = u(Eigen::Index(i), Eigen::Index(j));
            if (fire_j && all_ones(i)) continue;
            const cd want = (!fire_j && i == j) ? cd(1.0) : cd(0.0);
            if (std::abs(v - want) > tol) return false;
        }
    }
    return true;
}

}  // namespace

Matrix gate_unitary(GateKind g) {
    const double r = 1.0 / std::sqrt(2.0);
    const cd i(0.0, 1.0);
    switch (g) {
        case GateKind::X: return (Matrix(2, 2) << 0, 1, 1, 0).finished();
        case GateKind::Z: return (Matrix(2, 2) << 1, 0, 0, -1).finished();
        case GateKind::H: return (Matrix(2, 2) << r, r, r, -r).finished();
        case GateKind::S: return (Matrix(2, 2) << 1, 0, 0, i).finished();
        case GateKind::T: return (Matrix(2, 2) << 1, 0, 0, std::polar(1.0, M_PI / 4)).finished();
        case GateKind::Tdg: return (Matrix(2, 2) << 1, 0, 0, std::polar(1.0, -M_PI / 4)).finished();
        case GateKind::Swap: {
            Matrix m = Matrix::Zero(4, 4);
            m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
            return m;
        }
    }
    return {};
}

Matrix controlled_unitary(GateKind g, std::size_t k) {
    Matrix u = gate_unitary(g);
    const Eigen::Index t = u.rows();
    const Eigen::Index dim = t << k;
    Matrix m = Matrix::Identity(dim, dim);
    m.bottomRightCorner(t, t) = u;
    return m;
}

std::set<int> declared_control_set(const Instruction& ins) {
    std::set<int> s;
    for (std::size_t i = 0; i < ins.controls.size(); ++i) s.insert(int(i));
    return s;
}

bool verify_control_set(const Matrix& u, const std::set<int>& candidate) {
    const int n = qubits_of(u);
    if (std::size_t(n) > kMaxControlSetQubits) throw BudgetExceeded("verify_control_set: matrix too large");
    if (int(candidate.size()) >= n) return false;
    for (int p : candidate) {
        if (p < 0 || p >= n) return false;
    }
    const double tol = 1e-12;
    if (!exposes_block_form(u, candidate, n, tol)) return false;
    // The property is closed under taking subsets, so single-position
    // extensions decide maximality.
    if (int(candidate.size()) + 1 >= n) return true;
    for (int p = 0; p < n; ++p) {
        if (candidate.count(p)) continue;
        std::set<int> bigger = candidate;
        bigger.insert(p);
        if (exposes_block_form(u, bigger, n, tol)) return false;
    }
    return true;
}

Matrix instruction_unitary(const Instruction& ins, const std::vector<QubitId>& support) {
    if (!ins.is_gate()) throw Error("instruction_unitary: not a gate");
    const int n = int(support.size());
    auto pos = [&](QubitId q) {
        auto it = std::find(support.begin(), support.end(), q);
        if (it == support.end()) throw Error("instruction_unitary: qubit outside support");
        return int(it - support.begin());
    };
    std::vector<int> cpos, tpos;
    for (QubitId q : ins.controls) cpos.push_back(pos(q));
    for (QubitId q : ins.targets) tpos.push_back(pos(q));
    const Matrix u = gate_unitary(ins.gate);
    const int t = int(tpos.size());
    const std::size_t dim = std::size_t(1) << n;
    Matrix m = Matrix::Zero(Eigen::Index(dim), Eigen::Index(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        bool fire = std::all_of(cpos.begin(), cpos.end(), [&](int p) { return bit_at(j, p, n) == 1; });
        if (!fire) {
            m(Eigen::Index(j), Eigen::Index(j)) = 1;
            continue;
        }
        std::size_t col = 0;
        for (int k = 0; k < t; ++k) col = (col << 1) | std::size_t(bit_at(j, tpos[std::size_t(k)], n));
        for (std::size_t row = 0; row < (std::size_t(1) << t); ++row) {
            std::size_t i = j;
            for (int k = 0; k < t; ++k) {
                const std::size_t mask = std::size_t(1) << (n - 1 - tpos[std::size_t(k)]);
                const bool bit = (row >> (t - 1 - k)) & 1U;
                i = bit ? (i | mask) : (i & ~mask);
            }
            m(Eigen::Index(i), Eigen::Index(j)) += u(Eigen::Index(row), Eigen::Index(col));
        }
    }
    return m;
}

Matrix sequence_unitary(const std::vector<Instruction>& seq, const std::vector<QubitId>& support) {
    const Eigen::Index dim = Eigen::Index(1) << support.size();
    Matrix m = Matrix::Identity(dim, dim);
    for (const auto& ins : seq) m = instruction_unitary(ins, support) * m;
    return m;
}

std::vector<QubitId> joint_support(const std::vector<Instruction>& seq) {
    std::vector<QubitId> out;
    for (const auto& ins : seq) {
        for (QubitId q : ins.qubits()) {
            if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
        }
    }
    return out;
}

bool commute(const Instruction& a, const Instruction& b, std::size_t max_qubits) {
    std::vector<QubitId> support = joint_support({a, b});
    if (support.size() > max_qubits) return false;
    Matrix ua = instruction_unitary(a, support);
    Matrix ub = instruction_unitary(b, support);
    return ((ua * ub) - (ub * ua)).cwiseAbs().maxCoeff() <= 1e-10;
}

bool is_identity(const Matrix& m, double tol) {
    return m.rows() == m.cols() && (m - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    Eigen::Index r = 0, c = 0;
    b.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(b(r, c)) < tol) return a.cwiseAbs().maxCoeff() <= tol;
    const cd phase = a(r, c) / b(r, c);
    if (std::abs(std::abs(phase) - 1.0) > tol) return false;
    return (a - phase * b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace hoareopt
