#pragma once

#include <cstddef>

#include "qnb/block_map.hpp"

namespace qnb {

// Ring automata on layered cells. A cell of m layers is one letter of
// 2^m values; layer i (counted from 1) is bit i-1 of the letter.

// J_k: k layers. Layer i < k becomes v_0^i + v_1^(i+1); layer k becomes v_1^1.
LocalRule jk_rule(unsigned k, unsigned width = 1);
// K_k, the inverse of J_k: layer i becomes v_{-i}^k + sum_{j<i} v_{j-i}^j.
LocalRule kk_rule(unsigned k, unsigned width = 1);
// Toffoli automaton, layers 0-indexed: (v_0^1 + v_0^0 v_1^0, v_1^0).
LocalRule toffoli_rule();
// k Toffoli copies side by side; copy q (1..k) sits on bits 2q-2, 2q-1 and
// reads its control from q cells to the right instead of 1.
LocalRule tk_rule(unsigned k);

std::size_t default_ring_jk(unsigned k);
std::size_t default_ring_toffoli();
std::size_t default_ring_tk(unsigned k);
std::size_t default_ring_jt(unsigned k, unsigned l);
std::size_t default_ring_jt_iterated(unsigned k, unsigned l, unsigned n);

BlockMap make_jk(unsigned k, std::size_t ring);
BlockMap make_toffoli(std::size_t ring);
BlockMap make_tk(unsigned k, std::size_t ring);
// k layers of 2l bits (bit (i-1)*2l + p). Layers below k evolve as in J_k;
// layer k becomes T_l applied to layer 1, read one cell to the right.
BlockMap make_jt(unsigned k, unsigned l, std::size_t ring);
// As make_jt with J_k replaced by its n-th iterate: T_l acts on layer k of J_k^n.
BlockMap make_jt_iterated(unsigned k, unsigned l, unsigned n, std::size_t ring);

// Rebuilds a zoo map from its descriptor (family and parameters).
BlockMap make_zoo(const MapDescriptor& descriptor, std::size_t ring);

}  // namespace qnb
