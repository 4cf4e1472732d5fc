# Generated by tools/generate_kernels.py from data/coefficients.txt. Do not edit.
# Each assignment is one `var * child0 + child1` node of a Horner evaluation graph.

NODE_COUNTS = {
    "X00": 129,
    "X01": 175,
    "X02": 99,
    "X30": 132,
    "X31": 168,
    "X32": 81,
}

def row0(a0, a1, a2, b0, b1, b2, c0, c1, c2, d0, d1, d2):
    """Return (X00, X01, X02) for the given invariant coordinates."""
    t0 = -c1
    t1 = c0 + t0
    t2 = -a1 + t1
    t3 = a0 + t2
    t4 = a1 * 2
    t5 = -a0 + t4
    t6 = c1 * -2
    t7 = c0 + t6
    t8 = -a1
    t9 = c1
    t10 = c1 * t9
    t11 = a1 * t8 + t10
    t12 = c0 * t7 + t11
    t13 = a0 * t5 + t12
    t14 = a2 * t3 + t13
    t15 = c1 * 2
    t16 = c0 * 2 + t15
    t17 = a2 * -2 + t16
    t18 = a1 * -2 + t17
    t19 = a0 + t18
    t20 = c1 * -2
    t21 = c0 * -2 + t20
    t22 = a2 * 2 + t21
    t23 = a1 + t22
    t24 = -c1
    t25 = -c0 + t24
    t26 = a2 + t25
    t27 = a2 * t26
    t28 = a1 * t23 + t27
    t29 = a0 * t19 + t28
    t30 = d2 * t14 + t29
    t31 = c1 * 2
    t32 = -c0 + t31
    t33 = a1 * 2 + t32
    t34 = -a0 + t33
    t35 = -c1
    t36 = a1 * -2 + t35
    t37 = a0 + t36
    t38 = c1 * t37
    t39 = c0 * t34 + t38
    t40 = c1 * -2
    t41 = c0 + t40
    t42 = -a1 + t41
    t43 = c1
    t44 = a1 + t43
    t45 = c1 * t44
    t46 = c0 * t42 + t45
    t47 = a1 * t46
    t48 = a0 * t39 + t47
    t49 = -c1
    t50 = -c0 + t49
    t51 = c1 * 2
    t52 = c0 * 2 + t51
    t53 = a1 * t52
    t54 = a0 * t50 + t53
    t55 = -c1
    t56 = -c0 + t55
    t57 = a1 * t56
    t58 = a1 * t57
    t59 = a0 * t54 + t58
    t60 = d2 * t48 + t59
    t61 = a2 * t30 + t60
    t62 = c1 * 2
    t63 = c0 * -2 + t62
    t64 = -a2 + t63
    t65 = a1 + t64
    t66 = a0 + t65
    t67 = c1 * 2
    t68 = -c0 + t67
    t69 = a1 * 2 + t68
    t70 = a0 * 2 + t69
    t71 = -c1
    t72 = a1 * -2 + t71
    t73 = a0 * -2 + t72
    t74 = c1 * t73
    t75 = c0 * t70 + t74
    t76 = a2 * t66 + t75
    t77 = c1 * -2
    t78 = c0 + t77
    t79 = c1 * -2
    t80 = c0 + t79
    t81 = a1 * t80
    t82 = a0 * t78 + t81
    t83 = a1
    t84 = a0 + t83
    t85 = c1 * t84
    t86 = c1 * t85
    t87 = c0 * t82 + t86
    t88 = a2 * t76 + t87
    t89 = d1 * t88
    t90 = d0 * t89
    t91 = b2 * t61 + t90
    t92 = d2 * 2 - 4
    t93 = c1 * 4
    t94 = c0 * 4 + t93
    t95 = a2 * t92 + t94
    t96 = c1 * 4
    t97 = c0 * -2 + t96
    t98 = c1 * -2
    t99 = c1 * t98
    t100 = c0 * t97 + t99
    t101 = d2 * t100
    t102 = a2 * t95 + t101
    t103 = d1 * -4
    t104 = c0 * t103
    t105 = a2 * t104
    t106 = d0 * t102 + t105
    t107 = a1 * 2
    t108 = a0 * -4 + t107
    t109 = d2 * t108
    t110 = c0 * t109
    t111 = b2 * t110
    t112 = d0 * t106 + t111
    t113 = d2 * -2
    t114 = d1 * 4
    t115 = d0 * t114
    t116 = b2 * t113 + t115
    t117 = d1 * -4
    t118 = d0 * t117
    t119 = a0 * t118
    t120 = a2 * t116 + t119
    t121 = d2 * 2
    t122 = b2 * t121
    t123 = a0 * t122
    t124 = a0 * t123
    t125 = a2 * t120 + t124
    t126 = c0 * t125
    t127 = a1 * t112 + t126
    t128 = b1 * t91 + t127
    t129 = c1 * 4
    t130 = c0 * -4 + t129
    t131 = a1 * 4 + t130
    t132 = a0 * -4 + t131
    t133 = a1 * -4
    t134 = a0 * 2 + t133
    t135 = c1 * 4
    t136 = c0 * -2 + t135
    t137 = a1 * 2
    t138 = c1 * -2
    t139 = c1 * t138
    t140 = a1 * t137 + t139
    t141 = c0 * t136 + t140
    t142 = a0 * t134 + t141
    t143 = a2 * t132 + t142
    t144 = c0 * 4
    t145 = a1 * 4 + t144
    t146 = a0 * -2 + t145
    t147 = c0 * -4
    t148 = a1 * -2 + t147
    t149 = c0 * 4
    t150 = a2 * 2 + t149
    t151 = a2 * t150
    t152 = a1 * t148 + t151
    t153 = a0 * t146 + t152
    t154 = b1 * t143 + t153
    t155 = a1 * 4
    t156 = a0 * -2 + t155
    t157 = c1 * -4
    t158 = c0 * 2 + t157
    t159 = a1 * -2
    t160 = c1 * 2
    t161 = c1 * t160
    t162 = a1 * t159 + t161
    t163 = c0 * t158 + t162
    t164 = a0 * t156 + t163
    t165 = a1 * -8
    t166 = a0 * 4 + t165
    t167 = c1 * -4
    t168 = c0 * -4 + t167
    t169 = a1 * 4
    t170 = a1 * t169
    t171 = a2 * t168 + t170
    t172 = a0 * t166 + t171
    t173 = d2 * t164 + t172
    t174 = c1 * 4
    t175 = a1 * 4 + t174
    t176 = a0 * -2 + t175
    t177 = c1 * -4
    t178 = a1 * -2 + t177
    t179 = c1 * -4
    t180 = a2 * 2 + t179
    t181 = a2 * t180
    t182 = a1 * t178 + t181
    t183 = a0 * t176 + t182
    t184 = b1 * t183
    t185 = d2 * t173 + t184
    t186 = b0 * t154 + t185
    t187 = d2 * 4 - 8
    t188 = d2 * 4 - 8
    t189 = c1 * 8
    t190 = c0 * 8 + t189
    t191 = a1 * t188 + t190
    t192 = a0 * t187 + t191
    t193 = c1 * 8
    t194 = c0 * -4 + t193
    t195 = c1 * -4
    t196 = c1 * t195
    t197 = c0 * t194 + t196
    t198 = d2 * t197
    t199 = a2 * t192 + t198
    t200 = c1 * -4
    t201 = c0 * 4 + t200
    t202 = a2 * -4 + t201
    t203 = c1 * -4
    t204 = c0 * 2 + t203
    t205 = a2 * -2
    t206 = c1 * 2
    t207 = c1 * t206
    t208 = a2 * t205 + t207
    t209 = c0 * t204 + t208
    t210 = a1 * t202 + t209
    t211 = c1 * 8
    t212 = a1 * t211
    t213 = b0 * t210 + t212
    t214 = d0 * t213
    t215 = d1 * t199 + t214
    t216 = c1 * -4
    t217 = c0 * 4 + t216
    t218 = a2 * 4 + t217
    t219 = c1 * -4
    t220 = c0 * 2 + t219
    t221 = a2 * -2
    t222 = c1 * 2
    t223 = c1 * t222
    t224 = a2 * t221 + t223
    t225 = c0 * t220 + t224
    t226 = a0 * t218 + t225
    t227 = c0 * -8
    t228 = a0 * t227
    t229 = b1 * t226 + t228
    t230 = d1 * t229
    t231 = d1 * t230
    t232 = d0 * t215 + t231
    t233 = b2 * t186 + t232
    t234 = c1 * -4
    t235 = c0 * 4 + t234
    t236 = a2 * 4 + t235
    t237 = a1 * -4 + t236
    t238 = a0 * -4 + t237
    t239 = c0 * -4
    t240 = a2 * -4 + t239
    t241 = a1 * 4 + t240
    t242 = a0 * 4 + t241
    t243 = b1 * t238 + t242
    t244 = c1 * 4
    t245 = c0 * -4 + t244
    t246 = c1 * 4
    t247 = c0 * -4 + t246
    t248 = a1 * t247
    t249 = a0 * t245 + t248
    t250 = a1 * 4
    t251 = a0 * 4 + t250
    t252 = c0 * t251
    t253 = b1 * t249 + t252
    t254 = a2 * t243 + t253
    t255 = c1 * -4
    t256 = c0 * -4 + t255
    t257 = a2 * 4 + t256
    t258 = a1 * 4 + t257
    t259 = c1 * -4
    t260 = c0 * -4 + t259
    t261 = a1 * t260
    t262 = a2 * t258 + t261
    t263 = d0 * t262
    t264 = d1 * t254 + t263
    t265 = c1 * 4
    t266 = c0 * 4 + t265
    t267 = a2 * -4 + t266
    t268 = a1 * -4 + t267
    t269 = a0 * 4 + t268
    t270 = c1 * -4
    t271 = c0 * -4 + t270
    t272 = c1 * 4
    t273 = c0 * 4 + t272
    t274 = a1 * t273
    t275 = a0 * t271 + t274
    t276 = a2 * t269 + t275
    t277 = b2 * t276
    t278 = b1 * t277
    t279 = d0 * t264 + t278
    t280 = c1 * 4
    t281 = a2 * -4 + t280
    t282 = a1 * 4 + t281
    t283 = a0 * 4 + t282
    t284 = c1 * -4
    t285 = c0 * -4 + t284
    t286 = a2 * 4 + t285
    t287 = a0 * -4 + t286
    t288 = d1 * t287
    t289 = d0 * t283 + t288
    t290 = d1 * 4
    t291 = d0 * -4 + t290
    t292 = d1 * 4
    t293 = c0 * t292
    t294 = c1 * t291 + t293
    t295 = d0 * -4
    t296 = c1 * t295
    t297 = a1 * t296
    t298 = a0 * t294 + t297
    t299 = a2 * t289 + t298
    t300 = d1 * t299
    t301 = b1 * t300
    t302 = b0 * t279 + t301
    t303 = d2 * t233 + t302
    t304 = c1 * 4
    t305 = c0 * -4 + t304
    t306 = a1 * 4 + t305
    t307 = a0 * -4 + t306
    t308 = c1 * 4
    t309 = c0 * 4 + t308
    t310 = a2 * 4 + t309
    t311 = a1 * -8 + t310
    t312 = a0 * 8 + t311
    t313 = d2 * t307 + t312
    t314 = c1 * -4
    t315 = c0 * 4 + t314
    t316 = a1 * -4 + t315
    t317 = a0 * 4 + t316
    t318 = c1 * 8
    t319 = a2 * -4 + t318
    t320 = a1 * 4 + t319
    t321 = a0 * -4 + t320
    t322 = b0 * t317 + t321
    t323 = a2 * -4
    t324 = a1 * 4 + t323
    t325 = a0 * -4 + t324
    t326 = b0 * t325
    t327 = b1 * t322 + t326
    t328 = d2 * t313 + t327
    t329 = c1 * -8
    t330 = c0 * 8 + t329
    t331 = a2 * -4 + t330
    t332 = a1 * -4 + t331
    t333 = a0 * -4 + t332
    t334 = c1 * -8
    t335 = c0 * -8 + t334
    t336 = a1 * 8 + t335
    t337 = a0 * 8 + t336
    t338 = d2 * t333 + t337
    t339 = c1 * 4
    t340 = c0 * -4 + t339
    t341 = a2 * 4 + t340
    t342 = a0 * -8 + t341
    t343 = a0 * 8
    t344 = b1 * t342 + t343
    t345 = d1 * t344
    t346 = d0 * t338 + t345
    t347 = c1 * 4
    t348 = c0 * -4 + t347
    t349 = a2 * 4 + t348
    t350 = c1 * -8
    t351 = b0 * t349 + t350
    t352 = d0 * t351
    t353 = d0 * t352
    t354 = d1 * t346 + t353
    t355 = b2 * t328 + t354
    t356 = a2 * -4
    t357 = a1 * 4 + t356
    t358 = a0 * 4 + t357
    t359 = a2 * 4
    t360 = a1 * -4 + t359
    t361 = a0 * -4 + t360
    t362 = b1 * t358 + t361
    t363 = c1 * 4
    t364 = c0 * 4 + t363
    t365 = a2 * -4 + t364
    t366 = d0 * t365
    t367 = d1 * t362 + t366
    t368 = c1 * -4
    t369 = c0 * -4 + t368
    t370 = a2 * 4 + t369
    t371 = b2 * t370
    t372 = b1 * t371
    t373 = d0 * t367 + t372
    t374 = a2 * 4
    t375 = a1 * -4 + t374
    t376 = a0 * -4 + t375
    t377 = c1 * 4
    t378 = c0 * 4 + t377
    t379 = a2 * -4 + t378
    t380 = d1 * t379
    t381 = d0 * t376 + t380
    t382 = d1 * t381
    t383 = b1 * t382
    t384 = b0 * t373 + t383
    t385 = d2 * t355 + t384
    t386 = d2 * 8 - 16
    t387 = b1 * 8
    t388 = d2 * t386 + t387
    t389 = c1 * -8
    t390 = b1 * t389
    t391 = a0 * t388 + t390
    t392 = d2 * 16
    t393 = d0 * t392
    t394 = c1 * t393
    t395 = d1 * t391 + t394
    t396 = d2 * -8
    t397 = d2 * t396
    t398 = c1 * t397
    t399 = b2 * t398
    t400 = d1 * t395 + t399
    t401 = d2 * t400
    t402 = b0 * t385 + t401
    return t128, t303, t402


def row3(a0, a1, a2, b0, b1, b2, c0, c1, c2, d0, d1, d2):
    """Return (X30, X31, X32) for the given invariant coordinates."""
    t0 = c2 * -2
    t1 = c1 * 2 + t0
    t2 = -a2 + t1
    t3 = a1 + t2
    t4 = c2 * 2
    t5 = c0 + t4
    t6 = -a1 + t5
    t7 = c2 * 2
    t8 = -c1 + t7
    t9 = -a1 + t8
    t10 = c1 * t9
    t11 = c0 * t6 + t10
    t12 = a2 * t3 + t11
    t13 = c1 * -2
    t14 = -c0 + t13
    t15 = a2 + t14
    t16 = -c2
    t17 = c1 + t16
    t18 = c1
    t19 = -c2
    t20 = c2 * t19
    t21 = c1 * t18 + t20
    t22 = c0 * t17 + t21
    t23 = a2 * t15 + t22
    t24 = c2
    t25 = c1 * -2 + t24
    t26 = a2 + t25
    t27 = -c2
    t28 = c1 + t27
    t29 = c1 * t28
    t30 = a2 * t26 + t29
    t31 = c2 * t30
    t32 = c0 * t23 + t31
    t33 = a1 * t12 + t32
    t34 = c2 * -2
    t35 = c1 * 2 + t34
    t36 = c0 * 2 + t35
    t37 = -a2 + t36
    t38 = a1 * -2 + t37
    t39 = c2
    t40 = c1 * -2 + t39
    t41 = -c0 + t40
    t42 = a1 + t41
    t43 = c2 * 2
    t44 = -c1 + t43
    t45 = a1 * 2 + t44
    t46 = c1 * t45
    t47 = c0 * t42 + t46
    t48 = a2 * t38 + t47
    t49 = c1 * -2
    t50 = a2 + t49
    t51 = c1 * -2
    t52 = a2 + t51
    t53 = c2 * t52
    t54 = a1 * t50 + t53
    t55 = c2
    t56 = a1 + t55
    t57 = c1 * t56
    t58 = c1 * t57
    t59 = a2 * t54 + t58
    t60 = c0 * t48 + t59
    t61 = d1 * t60
    t62 = b2 * t33 + t61
    t63 = c2 * -2
    t64 = c1 * 2 + t63
    t65 = c0 * -2 + t64
    t66 = a2 * 2 + t65
    t67 = a1 + t66
    t68 = c2 * 2
    t69 = -c1 + t68
    t70 = c0 + t69
    t71 = -a2 + t70
    t72 = c2
    t73 = c1 * -2 + t72
    t74 = a2 * -2 + t73
    t75 = c2 * t74
    t76 = c0 * t71 + t75
    t77 = a1 * t67 + t76
    t78 = -c1
    t79 = -a2 + t78
    t80 = c1 * 2
    t81 = a2 * 2 + t80
    t82 = c2 * t81
    t83 = a1 * t79 + t82
    t84 = -c1
    t85 = -a2 + t84
    t86 = c2 * t85
    t87 = c2 * t86
    t88 = a1 * t83 + t87
    t89 = c0 * t77 + t88
    t90 = d2 * t89
    t91 = b2 * t90
    t92 = b1 * t62 + t91
    t93 = c2 * -4
    t94 = a1 * 2 + t93
    t95 = c0 * -2
    t96 = c2 * 2
    t97 = c2 * t96
    t98 = c0 * t95 + t97
    t99 = a1 * t94 + t98
    t100 = c2 * -4
    t101 = c0 * 4 + t100
    t102 = a1 * -4 + t101
    t103 = d1 * t102
    t104 = c0 * t103
    t105 = b2 * t99 + t104
    t106 = d1 * 4
    t107 = d1 * t106
    t108 = c2 * t107
    t109 = c0 * t108
    t110 = d2 * t105 + t109
    t111 = c1 * -2
    t112 = a2 * 4 + t111
    t113 = d1 * t112
    t114 = d1 * t113
    t115 = c2 * t114
    t116 = b1 * t115
    t117 = d2 * t110 + t116
    t118 = d2 * -4
    t119 = b1 * 2 + t118
    t120 = d2 * 4
    t121 = a2 * t120
    t122 = c0 * t119 + t121
    t123 = b1 * -2
    t124 = a2 * t123
    t125 = a2 * t124
    t126 = c0 * t122 + t125
    t127 = d1 * t126
    t128 = d1 * t127
    t129 = c2 * t128
    t130 = c1 * t117 + t129
    t131 = b0 * t92 + t130
    t132 = c2 * -4
    t133 = c1 * 4 + t132
    t134 = c0 * 4 + t133
    t135 = a2 * -4 + t134
    t136 = a1 * -4 + t135
    t137 = c2 * 4
    t138 = c1 * -4 + t137
    t139 = a2 * 4 + t138
    t140 = a1 * -4 + t139
    t141 = c0 * -2
    t142 = a1 * 4 + t141
    t143 = b2 * t140 + t142
    t144 = d1 * t136 + t143
    t145 = d1 * 4 - 4
    t146 = b2 * -2 + 2
    t147 = b2 * 4 - 4
    t148 = d1 * 4
    t149 = c2 * t148
    t150 = c1 * t147 + t149
    t151 = a2 * t146 + t150
    t152 = a1 * t145 + t151
    t153 = d1 * -4 + 4
    t154 = b2 * -2 + 2
    t155 = d1 * -4
    t156 = c2 * t155
    t157 = c1 * t154 + t156
    t158 = a1 * t153 + t157
    t159 = c2 * -4
    t160 = a1 * 2 + t159
    t161 = c2 * 2
    t162 = c2 * t161
    t163 = a1 * t160 + t162
    t164 = b2 * t163
    t165 = c1 * t158 + t164
    t166 = a2 * t152 + t165
    t167 = c0 * t144 + t166
    t168 = c2 * -4
    t169 = c1 * 4 + t168
    t170 = c0 * -4 + t169
    t171 = a2 * 4 + t170
    t172 = a1 * 4 + t171
    t173 = c1 * -4
    t174 = a2 * -4 + t173
    t175 = c1 * 4
    t176 = a2 * 4 + t175
    t177 = c2 * t176
    t178 = a1 * t174 + t177
    t179 = c0 * t172 + t178
    t180 = c2 * 4
    t181 = a2 * 4 + t180
    t182 = a1 * -2 + t181
    t183 = c2 * -4
    t184 = c0 * -4 + t183
    t185 = c0 * 2
    t186 = c2 * -2
    t187 = c2 * t186
    t188 = c0 * t185 + t187
    t189 = a2 * t184 + t188
    t190 = a1 * t182 + t189
    t191 = d2 * t179 + t190
    t192 = c2 * 4
    t193 = c0 * -4 + t192
    t194 = a2 * 4 + t193
    t195 = a1 * 4 + t194
    t196 = c1 * -4
    t197 = c0 * 4 + t196
    t198 = a2 * -4 + t197
    t199 = a1 * -4 + t198
    t200 = d2 * t199
    t201 = d1 * t195 + t200
    t202 = d2 * 4
    t203 = d1 * -4 + t202
    t204 = d2 * 4
    t205 = c1 * t204
    t206 = a2 * t203 + t205
    t207 = d1 * -4
    t208 = c2 * t207
    t209 = a2 * t208
    t210 = a1 * t206 + t209
    t211 = c0 * t201 + t210
    t212 = b2 * t191 + t211
    t213 = b1 * t167 + t212
    t214 = c2 * 4
    t215 = c1 * -4 + t214
    t216 = c0 * 4 + t215
    t217 = a2 * -4 + t216
    t218 = c2 * 4
    t219 = c1 * -4 + t218
    t220 = c0 * -4 + t219
    t221 = a1 * 4 + t220
    t222 = c2 * -8
    t223 = c1 * 8 + t222
    t224 = a2 * 8 + t223
    t225 = a1 * -8 + t224
    t226 = d2 * t221 + t225
    t227 = d1 * t217 + t226
    t228 = d1 * -4 + 4
    t229 = d1 * -2
    t230 = c0 * t229
    t231 = a1 * 4 + t230
    t232 = c2 * t228 + t231
    t233 = b1 * t232
    t234 = d2 * t227 + t233
    t235 = c2 * -4
    t236 = c1 * -4 + t235
    t237 = a2 * 2 + t236
    t238 = c1 * 8
    t239 = a2 * -4 + t238
    t240 = d1 * t237 + t239
    t241 = d1 * 2 - 4
    t242 = d1 * 4
    t243 = c2 * t242
    t244 = c1 * t241 + t243
    t245 = c1 * t244
    t246 = a2 * t240 + t245
    t247 = d2 * -4 + 8
    t248 = d2 * -4
    t249 = c1 * t248
    t250 = a2 * t247 + t249
    t251 = d2 * 4
    t252 = d2 * t251
    t253 = c1 * t252
    t254 = d1 * t250 + t253
    t255 = d2 * 4
    t256 = d2 * t255
    t257 = c1 * t256
    t258 = a1 * t257
    t259 = c2 * t254 + t258
    t260 = b1 * t246 + t259
    t261 = c0 * t234 + t260
    t262 = c2 * 4
    t263 = c1 * 4 + t262
    t264 = a1 * -2 + t263
    t265 = c1 * 4
    t266 = c0 * 2 + t265
    t267 = c2 * -2
    t268 = c1 * -4 + t267
    t269 = c2 * t268
    t270 = c0 * t266 + t269
    t271 = a1 * t264 + t270
    t272 = c2 * -8
    t273 = a1 * 4 + t272
    t274 = c1 * -4
    t275 = a2 * -4 + t274
    t276 = c2 * 4
    t277 = c2 * t276
    t278 = c0 * t275 + t277
    t279 = a1 * t273 + t278
    t280 = d2 * t271 + t279
    t281 = c2 * 4
    t282 = a1 * -2 + t281
    t283 = c1 * -4
    t284 = a2 * 2 + t283
    t285 = c1 * 2
    t286 = c2 * -2
    t287 = c2 * t286
    t288 = c1 * t285 + t287
    t289 = a2 * t284 + t288
    t290 = a1 * t282 + t289
    t291 = b1 * t290
    t292 = d2 * t280 + t291
    t293 = d2 * -8
    t294 = d2 * t293
    t295 = c1 * t294
    t296 = a1 * t295
    t297 = b2 * t292 + t296
    t298 = d1 * t261 + t297
    t299 = b0 * t213 + t298
    t300 = c2 * -4
    t301 = c1 * 4 + t300
    t302 = a2 * -4 + t301
    t303 = a1 * 4 + t302
    t304 = c2 * 4
    t305 = c0 * -4 + t304
    t306 = a1 * 4 + t305
    t307 = c1 * -4
    t308 = c0 * 4 + t307
    t309 = a2 * 4 + t308
    t310 = a1 * -8 + t309
    t311 = d1 * t306 + t310
    t312 = b2 * t303 + t311
    t313 = c1 * -4
    t314 = c0 * 4 + t313
    t315 = a2 * -4 + t314
    t316 = c2 * 4
    t317 = c0 * -4 + t316
    t318 = a2 * 8 + t317
    t319 = a1 * -4 + t318
    t320 = d2 * t315 + t319
    t321 = c2 * -4
    t322 = c0 * 4 + t321
    t323 = a1 * -4 + t322
    t324 = c1 * 4
    t325 = c0 * -4 + t324
    t326 = a2 * 4 + t325
    t327 = a2 * -8
    t328 = a1 * 8 + t327
    t329 = d2 * t326 + t328
    t330 = d1 * t323 + t329
    t331 = b2 * t320 + t330
    t332 = b1 * t312 + t331
    t333 = c1 * 4
    t334 = c0 * -4 + t333
    t335 = a2 * 4 + t334
    t336 = c2 * -4
    t337 = c0 * 4 + t336
    t338 = a1 * -4 + t337
    t339 = c2 * 8
    t340 = c1 * -8 + t339
    t341 = a2 * -8 + t340
    t342 = a1 * 8 + t341
    t343 = d2 * t338 + t342
    t344 = d1 * t335 + t343
    t345 = c1 * -4
    t346 = c0 * 4 + t345
    t347 = a2 * 4 + t346
    t348 = c2 * -4
    t349 = c1 * 8 + t348
    t350 = c0 * -4 + t349
    t351 = a2 * -8 + t350
    t352 = a1 * -4 + t351
    t353 = d1 * t347 + t352
    t354 = d1 * -8 + 16
    t355 = a2 * t354
    t356 = b1 * t353 + t355
    t357 = d2 * t344 + t356
    t358 = c2 * 4
    t359 = c0 * -4 + t358
    t360 = a1 * -4 + t359
    t361 = c2 * -8
    t362 = c1 * 4 + t361
    t363 = c0 * 4 + t362
    t364 = a2 * 4 + t363
    t365 = a1 * 8 + t364
    t366 = d2 * t360 + t365
    t367 = c2 * 4
    t368 = c1 * -4 + t367
    t369 = a2 * 4 + t368
    t370 = a1 * -4 + t369
    t371 = a2 * -8
    t372 = b1 * t370 + t371
    t373 = d2 * t366 + t372
    t374 = d2 * 8 - 16
    t375 = b1 * 8
    t376 = d2 * t374 + t375
    t377 = a1 * t376
    t378 = b2 * t373 + t377
    t379 = d1 * t357 + t378
    t380 = b0 * t332 + t379
    return t131, t299, t380
