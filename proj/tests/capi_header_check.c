/* Licensed under the Apache License, Version 2.0, see LICENSE for details. */
/* SPDX-License-Identifier: Apache-2.0 */

/* Compiled as C to keep the public header free of C++ constructs. */

#include "axt/axt.h"

int axt_c_roundtrip(void) {
  axt_sampler* s = NULL;
  int bit = -1;
  if (axt_sampler_from_json("{\"scheme\":\"oddmul2w\",\"w\":8,\"a\":3,\"t\":100}", &s) != AXT_OK)
    return -1;
  if (axt_sampler_sample(s, 10, &bit) != AXT_OK) bit = -1;
  axt_sampler_free(s);
  return bit;
}
