#include "chaindex/chaindex.h"

#include <stdio.h>
#include <string.h>

int main(void) {
  chaindex_graph* g = NULL;
  char* kf = NULL;
  size_t size = 0;
  if (chaindex_graph_create(2, CHAINDEX_KIND_CROSSED, &g) != CHAINDEX_OK) return 1;
  if (chaindex_graph_size(g, &size) != CHAINDEX_OK || size != 37) return 2;
  if (chaindex_resistance(g, "1", "9'", &kf) != CHAINDEX_OK) return 3;
  printf("r(1, 9') = %s\n", kf);
  chaindex_string_free(kf);
  chaindex_graph_destroy(g);
  if (chaindex_graph_create(-3, CHAINDEX_KIND_PLAIN, &g) == CHAINDEX_OK) return 4;
  return strlen(chaindex_last_error()) > 0 ? 0 : 5;
}
