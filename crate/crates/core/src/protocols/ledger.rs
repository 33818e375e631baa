use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    AliceToBob,
    BobToAlice,
}

/// Entanglement and classical communication consumed along one protocol branch.
///
/// Counts only ever increase. An e-bit is charged when a shared pair first
/// takes part in an operation; c-bits are charged per transmitted outcome bit.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResourceLedger {
    #[serde(rename = "ebits")]
    ebits_consumed: u32,
    #[serde(rename = "cbits_ab")]
    cbits_a_to_b: u32,
    #[serde(rename = "cbits_ba")]
    cbits_b_to_a: u32,
}

impl ResourceLedger {
    pub const BQST: ResourceLedger = ResourceLedger::of(2, 2, 2);
    pub const TWO_TWO_ONE: ResourceLedger = ResourceLedger::of(2, 2, 1);
    pub const ONE_ONE_ONE: ResourceLedger = ResourceLedger::of(1, 1, 1);

    /// A fixed ledger, for comparisons.
    pub const fn of(ebits: u32, a_to_b: u32, b_to_a: u32) -> Self {
        ResourceLedger {
            ebits_consumed: ebits,
            cbits_a_to_b: a_to_b,
            cbits_b_to_a: b_to_a,
        }
    }

    pub fn ebits_consumed(&self) -> u32 {
        self.ebits_consumed
    }

    pub fn cbits_a_to_b(&self) -> u32 {
        self.cbits_a_to_b
    }

    pub fn cbits_b_to_a(&self) -> u32 {
        self.cbits_b_to_a
    }

    pub(crate) fn consume_ebit(&mut self) {
        self.ebits_consumed += 1;
    }

    pub(crate) fn send(&mut self, direction: Direction, bits: u32) {
        match direction {
            Direction::AliceToBob => self.cbits_a_to_b += bits,
            Direction::BobToAlice => self.cbits_b_to_a += bits,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_accumulate() {
        let mut l = ResourceLedger::default();
        l.consume_ebit();
        l.send(Direction::AliceToBob, 2);
        l.send(Direction::BobToAlice, 1);
        assert_eq!(l, ResourceLedger::of(1, 2, 1));
        assert_eq!(
            (l.ebits_consumed(), l.cbits_a_to_b(), l.cbits_b_to_a()),
            (1, 2, 1)
        );
    }
}
