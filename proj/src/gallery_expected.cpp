#include "topodyn/gallery.hpp"

// Frozen fixture reports. Regenerate deliberately via the gallery command
// when a fixture is intentionally changed, and re-review the diff.

namespace topodyn::gallery {

extern const char* const kExpectedEx1 = R"json(
{
  "fixture": "ex1",
  "space": {
    "points": 2,
    "min_open": [
      [
        0,
        1
      ],
      [
        1
      ]
    ]
  },
  "closed_sets": [
    [],
    [
      0
    ],
    [
      0,
      1
    ]
  ],
  "orbit_closure_relation": [
    [
      0,
      0
    ],
    [
      1,
      0
    ],
    [
      1,
      1
    ]
  ],
  "flow_pap": true,
  "analysis": {
    "verdicts": {
      "pap_decomposition": false,
      "r_closed": false,
      "d_stable": false,
      "l_stable": true,
      "weakly_almost_periodic": true,
      "minimal": false,
      "compact_classes": true,
      "pointwise_periodic_like": true,
      "orbit_class_hausdorff": false
    },
    "witnesses": [
      {
        "kind": "symmetry-failure",
        "points": [
          0,
          1
        ],
        "explanation": "0 is in cl-row(1) but 1 is not in cl-row(0)"
      },
      {
        "kind": "closure-gap",
        "points": [
          0,
          1
        ],
        "explanation": "pair (0,1) is in the product closure but not in the row-closure relation"
      },
      {
        "kind": "density-failure",
        "points": [
          0
        ],
        "explanation": "cl(E(0)) = {0} is a proper subset"
      },
      {
        "kind": "hausdorff-failure",
        "points": [
          0,
          1
        ],
        "explanation": "the classes of 0 and 1 have no disjoint open neighborhoods in the quotient"
      }
    ],
    "notes": [
      "weak almost periodicity is trivially true on finite spaces (finite unions of closed sets are closed)",
      "compact_classes: trivially compact (finite)",
      "pointwise_periodic_like: all classes are finite on a finite space",
      "cl-row relation is not an equivalence; quotient taken by the orbit-class relation"
    ]
  }
}
)json";

extern const char* const kExpectedEx002 = R"json(
{
  "fixture": "ex002",
  "verdicts": {
    "t1": true,
    "compact": true,
    "hausdorff": false,
    "flow_pap": true,
    "decomposition_pap": false,
    "r_closed": false,
    "minimal": false,
    "pointwise_periodic": false,
    "periodic": false,
    "quotient_hausdorff": false
  },
  "witnesses": [],
  "notes": [],
  "certificates": [
    {
      "value": true,
      "kind": "t1:cofinite-base",
      "text": "the topology contains the cofinite topology, so every singleton is closed"
    },
    {
      "value": true,
      "kind": "compact:cofinite-neighborhoods",
      "text": "every neighborhood of a point of F is cofinite; one cover member leaves only finitely many points uncovered"
    },
    {
      "value": false,
      "kind": "hausdorff:hyperconnected",
      "text": "any two nonempty opens are cofinite up to F and therefore intersect"
    },
    {
      "value": true,
      "kind": "flow_pap:cofinite-return-times",
      "text": "every neighborhood of a point contains all but finitely many points of its orbit, so each return-time set is cofinite in Z and syndetic (sample gap 1)"
    },
    {
      "value": false,
      "kind": "decomposition_pap:symmetry-failure",
      "text": "cl(orbit([1/2])) is the whole space and contains [0/1], but cl(orbit([0/1])) = F omits [1/2]"
    },
    {
      "value": false,
      "kind": "r_closed:closure-gap",
      "text": "([0/1], [1/2]) is outside the orbit-closure relation since [1/2] is not in F = cl(orbit([0/1])); yet every basic neighborhood U of [0/1] contains a point a outside F whose orbit closure is the whole space, so (a, b) lies in the relation for any b in any neighborhood of [1/2]"
    },
    {
      "value": false,
      "kind": "minimal:proper-closure",
      "text": "cl(orbit([0/1])) = F is closed and proper"
    },
    {
      "value": false,
      "kind": "pointwise_periodic:infinite-orbit",
      "text": "the symbolic rotation is injective on every orbit, so orbits are infinite"
    },
    {
      "value": false,
      "kind": "periodic:infinite-orbit",
      "text": "no power of the rotation fixes a non-F point"
    },
    {
      "value": false,
      "kind": "quotient_hausdorff:sierpinski-quotient",
      "text": "the orbit classes are F and its complement; the complement of F is open but F is not, so the two classes cannot be separated"
    }
  ],
  "orbit_closure_of_non_f_point_is_whole": true,
  "orbit_closure_of_f_point_is_f": true,
  "syndetic_examples": [
    {
      "excluded_orbit_indices": [
        1,
        2
      ],
      "gap": 3,
      "text": "return-time set is Z minus 2 solved indices; gap 3 <= bound 5"
    },
    {
      "excluded_orbit_indices": [
        3,
        4
      ],
      "gap": 3,
      "text": "return-time set is Z minus 2 solved indices; gap 3 <= bound 9"
    }
  ]
}
)json";

extern const char* const kExpectedEx06 = R"json(
{
  "fixture": "ex06",
  "verdicts": {
    "t1": true,
    "compact": true,
    "hausdorff": true,
    "flow_pap": true,
    "decomposition_pap": true,
    "r_closed": true,
    "minimal": false,
    "pointwise_periodic": true,
    "periodic": false,
    "quotient_hausdorff": true
  },
  "witnesses": [],
  "notes": [],
  "certificates": [
    {
      "value": true,
      "kind": "t1:metrizable-model",
      "text": "level points are isolated and finite sets are closed"
    },
    {
      "value": true,
      "kind": "compact:one-point-compactification",
      "text": "every neighborhood of infinity is cofinite, so any cover has a finite subcover"
    },
    {
      "value": true,
      "kind": "hausdorff:isolated-plus-cofinite",
      "text": "two level points are separated by their singletons; a level point and infinity are separated by the singleton and its cofinite complement"
    },
    {
      "value": true,
      "kind": "flow_pap:periodic-orbits",
      "text": "the level-n cycle returns after n steps, so every return-time set contains a full residue class; infinity is fixed"
    },
    {
      "value": true,
      "kind": "decomposition_pap:closed-orbits",
      "text": "orbit closures are the orbits themselves (finite cycles and the fixed point) and already form an equivalence"
    },
    {
      "value": true,
      "kind": "r_closed:case-analysis",
      "text": "pairs on a common level stay in the relation; pairs on distinct levels and pairs touching infinity are separated by basic opens, e.g. the open set omitting level 2 is a neighborhood of infinity; relation pairs touching (0/2) stay on that level, so the pair is separated from the relation"
    },
    {
      "value": false,
      "kind": "minimal:proper-closure",
      "text": "the level-2 cycle is closed and proper"
    },
    {
      "value": true,
      "kind": "pointwise_periodic:cycles",
      "text": "the level-n orbit has period n and infinity is fixed"
    },
    {
      "value": false,
      "kind": "periodic:unbounded-orders",
      "text": "any global period would be divisible by every n >= 2"
    },
    {
      "value": true,
      "kind": "quotient_hausdorff:compactified-discrete",
      "text": "the orbit space is again a countable discrete set plus one cofinite point, which is Hausdorff"
    }
  ],
  "truncations": [
    {
      "levels": 5,
      "points": 15,
      "verdicts_match": true,
      "generator_order": 60
    },
    {
      "levels": 10,
      "points": 55,
      "verdicts_match": true,
      "generator_order": 2520
    },
    {
      "levels": 20,
      "points": 210,
      "verdicts_match": true,
      "generator_order": 232792560
    }
  ]
}
)json";

}  // namespace topodyn::gallery
