/* Minimal C consumer of the bgcheb C ABI.
 *
 * Build (from the workspace root, after `cargo build -p bgcheb-ffi`):
 *
 *   cc crates/bgcheb-ffi/examples/demo.c \
 *      -Icrates/bgcheb-ffi/include -Ltarget/debug -lbgcheb_ffi -lm \
 *      -o demo
 *   LD_LIBRARY_PATH=target/debug ./demo
 */
#include <stdio.h>
#include <stdlib.h>

#include "bgcheb.h"

static void check(BgStatus status, const char *what) {
  if (status != BG_STATUS_OK) {
    fprintf(stderr, "%s failed (%d): %s\n", what, (int)status,
            bg_last_error_message());
    exit(1);
  }
}

int main(void) {
  printf("bgcheb %s\n", bg_version());

  /* Exact parameters (beta, gamma) = (3/4, 1/5). */
  BgParamPair *params = NULL;
  check(bg_params_new(3, 4, 1, 5, &params), "bg_params_new");

  double lo = 0.0, hi = 0.0;
  check(bg_params_interval(params, &lo, &hi), "bg_params_interval");
  printf("supported interval: [%.6f, %.6f]\n", lo, hi);

  double value = 0.0;
  check(bg_eval(5, params, 0.3, &value), "bg_eval");
  printf("degree-5 member at 0.3: %.15f\n", value);

  /* Endpoint-including nodes and their Lebesgue constant. */
  BgPointSet *points = NULL;
  check(bg_points_new(BG_POINT_KIND_LOBATTO, 6, params, &points),
        "bg_points_new");
  size_t len = 0;
  check(bg_points_len(points, &len), "bg_points_len");
  double *nodes = malloc(len * sizeof(double));
  check(bg_points_copy(points, nodes, len), "bg_points_copy");
  printf("nodes:");
  for (size_t i = 0; i < len; ++i) printf(" %.6f", nodes[i]);
  printf("\n");
  free(nodes);

  double constant = 0.0, argmax = 0.0;
  check(bg_lebesgue_constant(points, 0, &constant, &argmax),
        "bg_lebesgue_constant");
  printf("Lebesgue constant: %.6f at x = %.6f\n", constant, argmax);

  /* Does the degree-2 member with beta = 3/2 collapse onto a classical
   * polynomial? */
  BgParamPair *collapse = NULL;
  check(bg_params_new(3, 2, 0, 1, &collapse), "bg_params_new");
  BgClassification cls;
  check(bg_classify(2, collapse, &cls), "bg_classify");
  printf("collapse case: %d, degree %llu, sign %d\n", (int)cls.kind,
         (unsigned long long)cls.degree, cls.sign);

  bg_params_free(collapse);
  bg_points_free(points);
  bg_params_free(params);
  return 0;
}
