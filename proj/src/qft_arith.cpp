// Copyright 2026 The qpi Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpi/qft_arith.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qpi/errors.hpp"

namespace qpi {

namespace {

void require_nonempty(const QubitList &reg, const char *name) {
    if (reg.empty()) {
        throw ContractViolation(std::string("register ") + name +
                                " must not be empty");
    }
}

/// All lists pairwise disjoint and internally duplicate-free.
void require_disjoint(std::initializer_list<const QubitList *> regs) {
    std::set<Qubit> seen;
    std::size_t total = 0;
    for (const QubitList *r : regs) {
        seen.insert(r->begin(), r->end());
        total += r->size();
    }
    if (seen.size() != total) {
        throw ContractViolation("arithmetic registers overlap");
    }
}

QubitList tail(const QubitList &reg, std::size_t from) {
    return QubitList(reg.begin() + static_cast<std::ptrdiff_t>(from),
                     reg.end());
}

int exponent(std::size_t u, std::size_t shift) {
    return static_cast<int>(u) - static_cast<int>(shift) + 1;
}

} // namespace

Qubit fourier_qubit(const QubitList &reg, std::size_t u) {
    if (u >= reg.size()) {
        throw ContractViolation("Fourier digit out of range");
    }
    return reg[reg.size() - 1 - u];
}

Circuit build_qft(const QubitList &reg) {
    require_nonempty(reg, "for QFT");
    require_disjoint({&reg});
    const std::size_t l = reg.size();
    Circuit qft;
    for (std::size_t u = l; u-- > 0;) {
        qft.add(GateOp::h(reg[u]));
        for (std::size_t k = u; k-- > 0;) {
            qft.add(GateOp::phase(static_cast<int>(u - k + 1), reg[u], {reg[k]}));
        }
    }
    for (std::size_t i = 0; i < l / 2; ++i) {
        qft.add(GateOp::swap(reg[i], reg[l - 1 - i]));
    }
    qft.add_register("reg", reg);
    return qft;
}

Circuit build_iqft(const QubitList &reg) { return build_qft(reg).inverse(); }

Circuit build_adder_rotations(const QubitList &addend, const QubitList &target,
                              std::size_t shift) {
    require_nonempty(addend, "addend");
    require_nonempty(target, "target");
    require_disjoint({&addend, &target});
    Circuit block;
    for (std::size_t t = 0; t < addend.size(); ++t) {
        for (std::size_t u = 0; u < target.size(); ++u) {
            const int j = exponent(u, t + shift);
            if (j > 0) {
                block.add(GateOp::phase(j, fourier_qubit(target, u), {addend[t]}));
            }
        }
    }
    return block;
}

Circuit build_qft_adder(const QubitList &addend, const QubitList &target,
                        std::optional<Qubit> control) {
    Circuit rotations = build_adder_rotations(addend, target);
    if (control) {
        for (const QubitList *r : {&addend, &target}) {
            if (std::find(r->begin(), r->end(), *control) != r->end()) {
                throw ContractViolation("adder control overlaps its operands");
            }
        }
        rotations = rotations.with_control(*control);
    }
    Circuit adder;
    adder.append(build_qft(target));
    adder.append(rotations);
    adder.append(build_iqft(target));
    adder.add_register("addend", addend);
    adder.add_register("target", target);
    if (control) {
        adder.add_register("control", {*control});
    }
    return adder;
}

Circuit build_mul_schoolbook(const ArithRegisters &regs) {
    require_nonempty(regs.a, "a");
    require_nonempty(regs.b, "b");
    require_nonempty(regs.c, "c");
    require_disjoint({&regs.a, &regs.b, &regs.c});
    Circuit mul;
    for (std::size_t s = 0; s < regs.a.size() && s < regs.c.size(); ++s) {
        Circuit step = build_qft_adder(regs.b, tail(regs.c, s), regs.a[s]);
        mul.append(step);
    }
    mul.add_register("a", regs.a);
    mul.add_register("b", regs.b);
    mul.add_register("c", regs.c);
    return mul;
}

Circuit build_mul_qft(const ArithRegisters &regs) {
    require_nonempty(regs.a, "a");
    require_nonempty(regs.b, "b");
    require_nonempty(regs.c, "c");
    require_disjoint({&regs.a, &regs.b, &regs.c});
    Circuit mul;
    mul.append(build_qft(regs.c));
    for (std::size_t s = 0; s < regs.a.size(); ++s) {
        for (std::size_t t = 0; t < regs.b.size(); ++t) {
            for (std::size_t u = 0; u < regs.c.size(); ++u) {
                const int j = exponent(u, s + t);
                if (j > 0) {
                    mul.add(GateOp::phase(j, fourier_qubit(regs.c, u),
                                          {regs.a[s], regs.b[t]}));
                }
            }
        }
    }
    mul.append(build_iqft(regs.c));
    mul.add_register("a", regs.a);
    mul.add_register("b", regs.b);
    mul.add_register("c", regs.c);
    return mul;
}

Circuit build_sq_adder_based(const ArithRegisters &regs) {
    if (!regs.ancilla) {
        throw ContractViolation("adder-based squarer needs an ancilla qubit");
    }
    require_nonempty(regs.a, "a");
    require_nonempty(regs.b, "b");
    const QubitList anc{*regs.ancilla};
    require_disjoint({&regs.a, &regs.b, &anc});
    Circuit sq;
    for (std::size_t s = 0; s < regs.a.size() && s < regs.b.size(); ++s) {
        sq.add(GateOp::x(*regs.ancilla, {regs.a[s]}));
        sq.append(build_qft_adder(regs.a, tail(regs.b, s), *regs.ancilla));
        sq.add(GateOp::x(*regs.ancilla, {regs.a[s]}));
    }
    sq.add_register("a", regs.a);
    sq.add_register("b", regs.b);
    sq.add_register("ancilla", anc);
    return sq;
}

Circuit build_sq_qft(const QubitList &a, const QubitList &b) {
    require_nonempty(a, "a");
    require_nonempty(b, "b");
    require_disjoint({&a, &b});
    Circuit sq;
    sq.append(build_qft(b));
    for (std::size_t s = 0; s < a.size(); ++s) {
        for (std::size_t t = 0; t < a.size(); ++t) {
            for (std::size_t u = 0; u < b.size(); ++u) {
                const int j = exponent(u, s + t);
                if (j <= 0) {
                    continue;
                }
                QubitList controls = t == s ? QubitList{a[s]}
                                            : QubitList{a[s], a[t]};
                sq.add(GateOp::phase(j, fourier_qubit(b, u), std::move(controls)));
            }
        }
    }
    sq.append(build_iqft(b));
    sq.add_register("a", a);
    sq.add_register("b", b);
    return sq;
}

} // namespace qpi
