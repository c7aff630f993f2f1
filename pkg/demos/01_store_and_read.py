#!/usr/bin/env python3
"""Storing a bit word in a state vector and reading it back bit by bit.

Each qubit of the register is initialized to one of three factors:
(1 0) pins its index bit to 0, (0 1) pins it to 1, and the unnormalized
pair (1 1) leaves it free. The Kronecker product of the factors is the
stored word: its support (the indices with nonzero amplitude) is the set
of 1-bits.
"""

from svmem import Factor, encode, probabilities, ram_read, support

# The three-factor product (1 0) x (1 0) x (1 1) stores the word 11000000.
psi = encode("ZZB")
print("pattern ZZB encodes amplitudes:", psi.amps.real.astype(int).tolist())
print("stored 1-bits (support):       ", sorted(support(psi)))
print("readout distribution:          ", probabilities(psi).tolist())
print()

# RAM view: address any bit and read it out, in any order. The probability
# is the chance an auxiliary qubit reads 1 after the matching needle oracle.
for k in (1, 5, 0, 7):
    bit, prob = ram_read(psi, k)
    print(f"address {k}: bit={bit}  p(aux reads 1)={prob}")
print()

# Every mix of pinned and free qubits works the same way.
fancy = encode([Factor.BOTH, Factor.ONE, Factor.BOTH])
print("pattern BOB stores bits at:", sorted(support(fancy)))
word = ["1" if ram_read(fancy, k)[0] else "0" for k in range(8)]
print("read back as a word:       ", "".join(word))
