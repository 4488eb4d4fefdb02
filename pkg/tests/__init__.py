# Test suite for the superalgebra embedding verifier
