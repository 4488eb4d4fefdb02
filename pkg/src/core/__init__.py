# Algebra engine and verification suites
