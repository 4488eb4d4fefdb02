# Superalgebra embedding verifier
