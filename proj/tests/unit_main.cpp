#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdlib>

int main(int argc, char** argv) {
  // keep BLAS single threaded so eigensolver results are bit-stable
  setenv("OPENBLAS_NUM_THREADS", "1", 0);
  doctest::Context ctx(argc, argv);
  return ctx.run();
}
