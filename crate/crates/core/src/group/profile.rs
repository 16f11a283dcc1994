use std::collections::BTreeSet;

use serde::Serialize;

use super::FiniteGroup;
use crate::arith::{big_omega, distinct_primes, is_prime, lcm, prime_power_base};

/// Classification predicates derived from element orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub is_cyclic: bool,
    /// `|G|` has at most one prime divisor (the trivial group counts).
    pub is_p_group: bool,
    /// The prime of a nontrivial p-group.
    pub prime: Option<u64>,
    /// Every nontrivial element has prime-power order.
    pub is_cp_group: bool,
    /// Every nontrivial element has prime order (a P-group).
    pub is_prime_order_group: bool,
    /// `t` when G is a non-cyclic 2-group of order `4 * 2^t` with a unique involution.
    pub generalized_quaternion: Option<u32>,
    pub unique_involution: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ElementOrderProfile {
    pub order: u64,
    pub orders: Vec<u64>,
    pub pi_e: BTreeSet<u64>,
    pub exponent: u64,
    /// Largest `big_omega(m)` over element orders `m` that are not prime
    /// powers; absent for CP-groups.
    pub lambda: Option<u32>,
    pub flags: ClassFlags,
}

impl ElementOrderProfile {
    pub fn new(group: &FiniteGroup) -> Self {
        let n = group.order() as u64;
        let orders: Vec<u64> = group.elements().map(|a| group.element_order(a)).collect();
        let pi_e: BTreeSet<u64> = orders.iter().copied().collect();
        let exponent = pi_e.iter().fold(1, |acc, &m| lcm(acc, m));
        let lambda = pi_e
            .iter()
            .filter(|&&m| m > 1 && prime_power_base(m).is_none())
            .map(|&m| big_omega(m))
            .max();

        let primes = distinct_primes(n);
        let is_p_group = primes.len() <= 1;
        let is_cyclic = pi_e.contains(&n);
        let is_cp_group = pi_e
            .iter()
            .all(|&m| m == 1 || prime_power_base(m).is_some());
        let is_prime_order_group = pi_e.iter().all(|&m| m == 1 || is_prime(m));

        let mut involutions = orders.iter().enumerate().filter(|(_, &o)| o == 2);
        let unique_involution = match (involutions.next(), involutions.next()) {
            (Some((a, _)), None) => Some(a),
            _ => None,
        };
        let generalized_quaternion = if primes == [2] && !is_cyclic && unique_involution.is_some() {
            // |G| = 2^(t+2); a non-cyclic 2-group has order at least 4
            Some(big_omega(n) - 2)
        } else {
            None
        };

        ElementOrderProfile {
            order: n,
            orders,
            pi_e,
            exponent,
            lambda,
            flags: ClassFlags {
                is_cyclic,
                is_p_group,
                prime: if is_p_group {
                    primes.first().copied()
                } else {
                    None
                },
                is_cp_group,
                is_prime_order_group,
                generalized_quaternion,
                unique_involution,
            },
        }
    }

    pub fn order_of(&self, a: usize) -> u64 {
        self.orders[a]
    }

    /// `max{big_omega(m) : m in pi_e}`.
    pub fn max_big_omega(&self) -> u32 {
        self.pi_e.iter().map(|&m| big_omega(m)).max().unwrap_or(0)
    }

    pub fn prime_divisors(&self) -> Vec<u64> {
        distinct_primes(self.order)
    }

    /// Whether some element has order `exp(G)`.
    pub fn exponent_realized(&self) -> bool {
        self.pi_e.contains(&self.exponent)
    }

    /// The `k` with `G = Z_{2^k}`, `k >= 1`.
    pub fn cyclic_two_group_rank(&self) -> Option<u32> {
        (self.flags.is_cyclic && self.flags.prime == Some(2)).then(|| big_omega(self.order))
    }
}
