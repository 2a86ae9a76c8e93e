window.search = Object.assign(window.search, JSON.parse('{"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}},"doc_urls":["introduction.html#introduction","kernels.html#exponential-kernels","kernels.html#ambient-evaluation-and-homogeneous-variants","kernels.html#gram-matrices","ntk.html#the-neural-tangent-kernel","ntk.html#the-two-layer-closed-form","ntk.html#homogeneity-and-the-bias-decomposition","ntk.html#normalization","spectra.html#spectra-on-the-sphere","spectra.html#decay-slopes","spectra.html#the-bessel-integral-cross-check","spectra.html#empirical-spectra-and-disk-eigenfunctions","regression.html#regression-and-learning-times","regression.html#gradient-descent-and-the-kd-law","cexp.html#hierarchical-convolutional-kernels","cexp.html#fitting-exponential-kernels-to-the-ntk","cli.html#the-command-line","cli.html#spectrum","cli.html#fit","cli.html#krr","cli.html#gdsim","cli.html#cexp","cli.html#gen"],"index":{"fields":["title","body","breadcrumbs"],"pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5","index":{"body":{"root":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"19":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":11,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}}}}}}}}},"3":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"j":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}}}}}}}}},"=":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"0":{"docs":{"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"2":{"tf":2.449489742783178},"4":{"tf":1.7320508075688772},"5":{"tf":1.0},"6":{"tf":1.0}},"df":6,"2":{"docs":{"5":{"tf":1.0}},"df":1}},"1":{"docs":{"14":{"tf":1.0},"6":{"tf":1.0}},"df":2},"2":{"docs":{},"df":0,"5":{"docs":{"1":{"tf":1.0}},"df":1}},"3":{"docs":{"14":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4},"4":{"docs":{"6":{"tf":1.0}},"df":1},"5":{"docs":{"5":{"tf":1.0},"6":{"tf":1.0}},"df":2},"6":{"docs":{"1":{"tf":1.0}},"df":1},"7":{"docs":{"6":{"tf":1.0}},"df":1},"8":{"docs":{"6":{"tf":1.0}},"df":1},"9":{"docs":{},"df":0,"5":{"docs":{"8":{"tf":1.0}},"df":1},"9":{"docs":{},"df":0,"9":{"docs":{"9":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"1":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"14":{"tf":2.8284271247461903},"16":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":2.23606797749979}},"df":11,".":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.7320508075688772},"10":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.4142135623730951},"4":{"tf":1.7320508075688772},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}},"df":8,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}},"2":{"docs":{"6":{"tf":1.0}},"df":1},"5":{"docs":{"15":{"tf":1.0}},"df":1},"6":{"docs":{},"df":0,"5":{"docs":{"9":{"tf":1.0}},"df":1}},"9":{"docs":{"15":{"tf":1.0}},"df":1,"4":{"docs":{"17":{"tf":1.0}},"df":1}}},"/":{"docs":{},"df":0,"λ":{"docs":{},"df":0,"_":{"docs":{},"df":0,"k":{"docs":{"13":{"tf":1.0}},"df":1}}}},"0":{"docs":{"10":{"tf":1.4142135623730951},"14":{"tf":1.0},"17":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":6,"0":{"docs":{"17":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":2,"0":{"docs":{"22":{"tf":1.0}},"df":1},"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"1":{"docs":{"11":{"tf":1.0},"22":{"tf":1.0},"8":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"4":{"docs":{},"df":0,"9":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"b":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"6":{"docs":{},"df":0,"0":{"docs":{},"df":0,"6":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"3":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"3":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"0":{"docs":{"9":{"tf":1.4142135623730951}},"df":1}},"2":{"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":5,"8":{"docs":{"13":{"tf":1.0}},"df":1}},"4":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0},"8":{"tf":1.0}},"df":3},"5":{"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.7320508075688772}},"df":4},"e":{"docs":{"1":{"tf":1.7320508075688772},"10":{"tf":1.0},"12":{"tf":2.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951},"4":{"tf":1.7320508075688772},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}},"df":13},"x":{"docs":{},"df":0,"1":{"docs":{"14":{"tf":1.0}},"df":1}}},"2":{"docs":{"1":{"tf":2.6457513110645907},"11":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":10,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"8":{"tf":1.0}},"df":1,"}":{"docs":{},"df":0,"(":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},",":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"8":{"docs":{"20":{"tf":1.0}},"df":1}}}},".":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.0}},"df":1}}},"0":{"docs":{"15":{"tf":1.0},"6":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"4":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"2":{"docs":{},"df":0,"5":{"docs":{"9":{"tf":1.0}},"df":1}},"5":{"docs":{"13":{"tf":1.4142135623730951}},"df":1},"7":{"docs":{},"df":0,"5":{"docs":{"17":{"tf":1.0}},"df":1}}},"^":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"20":{"tf":1.0}},"df":2}},"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"k":{"docs":{"8":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"γ":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{"5":{"tf":1.0}},"df":1}},"3":{"docs":{"10":{"tf":1.7320508075688772},"11":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":6,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"8":{"tf":1.0}},"df":1}}},".":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0},"2":{"tf":1.0}},"df":2}},"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"×":{"docs":{},"df":0,"3":{"docs":{"14":{"tf":1.0}},"df":1}}},"4":{"docs":{"13":{"tf":1.7320508075688772},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"3":{"tf":1.0}},"df":4,".":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.0}},"df":1}}},"5":{"docs":{"12":{"tf":1.0},"8":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0}},"df":1}},"0":{"docs":{"3":{"tf":1.0}},"df":1},"1":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"6":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"7":{"tf":1.0}},"df":5,".":{"docs":{},"df":0,"0":{"docs":{"2":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"5":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}},"0":{"docs":{"8":{"tf":1.0}},"df":1}},"7":{"docs":{"22":{"tf":1.0},"3":{"tf":1.0}},"df":2},"8":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"19":{"tf":1.0}},"df":3,"0":{"docs":{},"df":0,"0":{"docs":{"22":{"tf":1.0}},"df":1}},"8":{"docs":{},"df":0,"0":{"docs":{"9":{"tf":1.4142135623730951}},"df":1}}},"9":{"docs":{"14":{"tf":1.0}},"df":1},"_":{"docs":{"9":{"tf":1.0}},"df":1,"0":{"docs":{"10":{"tf":1.0}},"df":1},"i":{"docs":{"12":{"tf":1.4142135623730951},"14":{"tf":1.7320508075688772}},"df":2},"j":{"docs":{"8":{"tf":1.0}},"df":1},"k":{"docs":{"10":{"tf":1.0},"8":{"tf":2.6457513110645907},"9":{"tf":1.0}},"df":3},"u":{"docs":{"15":{"tf":1.0}},"df":1},"z":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"{":{"docs":{},"df":0,"i":{"docs":{},"df":0,"+":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":1.0}},"df":1}}},"m":{"docs":{"14":{"tf":1.0}},"df":1}}},"a":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"6":{"tf":1.0}},"df":1}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}},"o":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0}},"df":3}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}}}}},"d":{"docs":{"6":{"tf":1.0}},"df":1,"d":{"docs":{"19":{"tf":1.0},"7":{"tf":1.0}},"df":2},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.4142135623730951}},"df":3}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":15}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"4":{"tf":1.0}},"df":3}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0}},"df":2,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"2":{"tf":1.0},"3":{"tf":1.0}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.4142135623730951}},"df":1}}},"z":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"3":{"tf":1.0}},"df":3}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}},"t":{"docs":{"10":{"tf":1.0}},"df":1},"z":{"docs":{"11":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"l":{"docs":{"8":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.7320508075688772},"11":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"t":{"docs":{},"df":0,")":{"docs":{},"df":0,"?":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.0}},"df":4}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{"6":{"tf":1.0}},"df":1},"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}},"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}},"f":{"docs":{},"df":0,"g":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"e":{"docs":{},"df":0,"1":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}}},"_":{"docs":{},"df":0,"z":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"4":{"tf":1.0}},"df":1}}},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"7":{"tf":1.0}},"df":1}}},"u":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{"1":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0}},"df":1}}},"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,".":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"4":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{"2":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{"6":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}},"v":{"docs":{"2":{"tf":1.0}},"df":1,"2":{"docs":{"14":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"&":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"k":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}},"r":{"docs":{},"df":0,"1":{"docs":{"13":{"tf":1.0}},"df":1},"2":{"docs":{"13":{"tf":1.0},"9":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{"8":{"tf":1.0}},"df":1},"5":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"9":{"tf":1.0}},"df":1}}},"·":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0}},"df":2}}},"b":{"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"6":{"tf":1.0}},"df":4,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"6":{"tf":1.0}},"df":1}}},"·":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"k":{"docs":{},"df":0,"j":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0}},"df":3}},"k":{"docs":{},"df":0,"e":{"docs":{"7":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"2":{"tf":1.0}},"df":2,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"c":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"4":{"docs":{},"df":0,"8":{"docs":{},"df":0,"}":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"a":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{"8":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"8":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{"5":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":2},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0}},"df":2}}}}},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":2.0},"7":{"tf":1.4142135623730951}},"df":7,"s":{"docs":{"15":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.7320508075688772}},"df":1}}}}}}}}}}}}}},"n":{"docs":{"21":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.0},"14":{"tf":1.0},"9":{"tf":1.0}},"df":4}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"7":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0}},"df":1}}},"·":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"c":{"docs":{"1":{"tf":1.7320508075688772},"10":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0}},"df":4,"_":{"docs":{"4":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"x":{"docs":{},"df":0,"p":{"docs":{"21":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}}}}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.4142135623730951}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"z":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"5":{"docs":{"14":{"tf":1.0}},"df":1}}},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":4,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"e":{"docs":{},"df":0,"1":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.7320508075688772}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"13":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":3},"u":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1},"f":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"16":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0}},"df":2,"s":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0},"19":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"l":{"docs":{"19":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{"5":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}},"df":3}}}},"m":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0}},"df":2},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951}},"df":2}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"21":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}},"r":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":4,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,"0":{"docs":{"15":{"tf":1.0}},"df":1}}},"2":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":5}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":3,"’":{"docs":{"0":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0}},"df":4,"/":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}}}}},"‖":{"docs":{},"df":0,"x":{"docs":{"1":{"tf":1.0}},"df":1}}},"d":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":5,"+":{"docs":{},"df":0,"1":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"a":{"docs":{"11":{"tf":1.0},"16":{"tf":1.4142135623730951},"19":{"tf":1.0}},"df":3,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"0":{"tf":1.7320508075688772},"13":{"tf":1.7320508075688772},"17":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":4,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"k":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}}},"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0}},"df":4}}}},"i":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"h":{"docs":{"15":{"tf":1.0},"18":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951}},"df":3}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"20":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"m":{"docs":{"17":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}},"k":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":3}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"7":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"/":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}},"t":{"docs":{"14":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}},"t":{"docs":{"10":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"1":{"docs":{"4":{"tf":1.4142135623730951}},"df":1},"2":{"docs":{"4":{"tf":1.4142135623730951}},"df":1,")":{"docs":{},"df":0,"?":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":5}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{"21":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0}},"df":2}}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":6}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"k":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{"20":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772}},"df":4}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"1":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0}},"df":2,"l":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"19":{"tf":1.0}},"df":2}},"p":{"docs":{"1":{"tf":1.7320508075688772},"18":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":2.23606797749979},"1":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"9":{"tf":1.0}},"df":8}}}}},"s":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}},"f":{"docs":{"13":{"tf":1.7320508075688772}},"df":1,"(":{"docs":{},"df":0,"x":{"docs":{"12":{"tf":1.0}},"df":1}},".":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"y":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"6":{"docs":{},"df":0,"4":{"docs":{"12":{"tf":1.4142135623730951},"21":{"tf":1.0},"5":{"tf":1.0}},"df":3,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2,"u":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}}},"l":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1},"s":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":5}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.4142135623730951},"18":{"tf":1.7320508075688772},"2":{"tf":1.0}},"df":3},"y":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"c":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"19":{"tf":1.0}},"df":1,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"k":{"docs":{},"df":0,"f":{"docs":{},"df":0,"c":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"6":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{"17":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}},"t":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":2.0}},"df":5,".":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}},"_":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"k":{"docs":{"15":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}},"x":{"docs":{"4":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":15},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"2":{"tf":1.0}},"df":3},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"8":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"1":{"docs":{"8":{"tf":1.0},"9":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"k":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}},"df":5,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"x":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}},"q":{"docs":{"11":{"tf":1.4142135623730951},"20":{"tf":1.0}},"df":2,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"20":{"tf":1.0},"8":{"tf":1.0}},"df":5}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"x":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}},"i":{"docs":{"0":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.0},"4":{"tf":1.0}},"df":5}}}}},"k":{"docs":{},"df":0,"–":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}}}},"g":{"docs":{"3":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"k":{"docs":{"8":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"1":{"docs":{"8":{"tf":1.0}},"df":1},"t":{"docs":{"8":{"tf":1.0}},"df":1},"x":{"docs":{},"df":0,"·":{"docs":{},"df":0,"z":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"15":{"tf":2.449489742783178},"18":{"tf":1.4142135623730951}},"df":2}}},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"9":{"tf":1.0}},"df":6}}},"–":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}},"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"20":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"20":{"tf":1.0}},"df":2}}}}},"m":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"21":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":6,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}},".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"w":{"docs":{"15":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":6,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"z":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"8":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"8":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"1":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}}}},"g":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0}},"df":4}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"2":{"tf":1.7320508075688772},"6":{"tf":1.0}},"df":4,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"2":{"tf":1.0}},"df":1}}},"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"t":{"docs":{"19":{"tf":1.0}},"df":1}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"22":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":3}}}},"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":2.449489742783178},"21":{"tf":2.0}},"df":2,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"14":{"tf":1.4142135623730951}},"df":1},"4":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}}}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"21":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}},"x":{"docs":{"8":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"’":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.4142135623730951}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.4142135623730951},"20":{"tf":1.0}},"df":2}}}},"j":{"docs":{"10":{"tf":1.0},"12":{"tf":1.4142135623730951}},"df":2,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"²":{"docs":{},"df":0,"_":{"docs":{},"df":0,"{":{"docs":{},"df":0,"k":{"docs":{},"df":0,"+":{"docs":{},"df":0,"(":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}},"k":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"11":{"tf":1.7320508075688772},"12":{"tf":1.7320508075688772},"13":{"tf":1.4142135623730951},"17":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":8,"(":{"docs":{},"df":0,"1":{"docs":{"14":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":2},"t":{"docs":{"1":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2},"x":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0}},"df":2,"·":{"docs":{},"df":0,"z":{"docs":{"8":{"tf":1.0}},"df":1}}}},",":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,",":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"^":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1},"u":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":3.1622776601683795},"1":{"tf":2.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.7320508075688772},"14":{"tf":2.449489742783178},"15":{"tf":1.0},"17":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":1.7320508075688772},"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951},"8":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}},"df":20,"’":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}}},"r":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"l":{"docs":{"14":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"13":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"18":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":8,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"t":{"docs":{},"df":0,")":{"docs":{},"df":0,"?":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"3":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"15":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"[":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}},"w":{"docs":{"17":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":2.449489742783178},"5":{"tf":1.0},"7":{"tf":1.7320508075688772}},"df":5,"s":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.0}},"df":1}}},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}},",":{"docs":{},"df":0,"c":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"20":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.7320508075688772}},"df":1},"n":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"16":{"tf":1.0}},"df":2}}}}},"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951}},"df":1,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.0},"17":{"tf":1.4142135623730951},"9":{"tf":2.0}},"df":3}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":15}},"k":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}}}},"p":{"docs":{"14":{"tf":1.0},"4":{"tf":1.0}},"df":2},"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"14":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1},"x":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":6}}}},"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"3":{"tf":1.4142135623730951}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"16":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"17":{"tf":1.0}},"df":1}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"3":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1,"u":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0},"19":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1,"p":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0},"8":{"tf":1.0}},"df":2,"i":{"docs":{"13":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{"14":{"tf":1.0}},"df":1}}},"n":{"docs":{"13":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":2,"(":{"docs":{},"df":0,"d":{"docs":{},"df":0,",":{"docs":{},"df":0,"k":{"docs":{"8":{"tf":1.7320508075688772}},"df":1}}}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.4142135623730951},"20":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":3}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{"19":{"tf":1.4142135623730951}},"df":1,"e":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.4142135623730951}},"df":3}},"r":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":5}}}}},"t":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":2.449489742783178},"11":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.4142135623730951},"18":{"tf":1.7320508075688772},"2":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":8,"/":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}},"6":{"docs":{"17":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"17":{"tf":1.0}},"df":1}}},"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"5":{"tf":1.0},"6":{"tf":1.0}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":3},"4":{"docs":{"6":{"tf":1.4142135623730951}},"df":1}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"6":{"docs":{"7":{"tf":1.0},"9":{"tf":1.0}},"df":2},"l":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.4142135623730951}},"df":4}}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0}},"df":1}},"k":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":15},"n":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":8,"t":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.7320508075688772},"14":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.7320508075688772}},"df":4}}}},"u":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":7,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.7320508075688772},"3":{"tf":1.0}},"df":2}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":9}}}},"p":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0}},"df":3,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0}},"df":1}}}},"d":{"docs":{"14":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{"6":{"tf":1.4142135623730951}},"df":1,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,">":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{"15":{"tf":1.0}},"df":1}},"r":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0}},"df":4}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1}},"n":{"docs":{"0":{"tf":1.0}},"df":1},"x":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0},"2":{"tf":1.4142135623730951}},"df":2,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}},"u":{"docs":{"17":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.7320508075688772},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"19":{"tf":1.0},"3":{"tf":1.7320508075688772},"4":{"tf":1.0}},"df":6,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"z":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"6":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}},"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"16":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"16":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}}},"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"8":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"15":{"tf":1.0}},"df":1,"t":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0},"2":{"tf":1.0}},"df":2}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0}},"df":1}},"t":{"docs":{"22":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0}},"df":1}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"8":{"tf":1.0}},"df":4,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.4142135623730951}},"df":1,"e":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{"17":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"1":{"docs":{"13":{"tf":1.7320508075688772}},"df":1},"2":{"docs":{"13":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":2},"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951}},"df":2}}}},"i":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{"21":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"13":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"w":{"docs":{"21":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"20":{"tf":1.0}},"df":2}},"v":{"docs":{"11":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":4}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"8":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"19":{"tf":1.0}},"df":3}}}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951}},"df":2}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"21":{"tf":1.0}},"df":4,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"f":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"6":{"tf":1.0}},"df":3}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"12":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0}},"df":2}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"12":{"tf":1.7320508075688772},"19":{"tf":2.23606797749979}},"df":3}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"t":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}},"w":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":5,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"8":{"tf":1.0}},"df":3}},"2":{"docs":{"8":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,",":{"docs":{},"df":0,"z":{"docs":{"14":{"tf":1.0}},"df":1}}},"z":{"docs":{},"df":0,",":{"docs":{},"df":0,"z":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"k":{"docs":{"9":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.0},"22":{"tf":1.0},"8":{"tf":1.0}},"df":6},"p":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,"4":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}},"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"2":{"tf":1.7320508075688772},"4":{"tf":1.0},"7":{"tf":1.0}},"df":6}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}}},"e":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2,"d":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":2.0}},"df":3}},"l":{"docs":{},"df":0,"f":{"docs":{"4":{"tf":1.0}},"df":1}},"t":{"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0}},"df":4}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.4142135623730951}},"df":1}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0},"18":{"tf":1.0}},"df":2},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0}},"df":1}},"z":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"17":{"tf":1.7320508075688772},"9":{"tf":2.449489742783178}},"df":3,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}},"v":{"docs":{"12":{"tf":1.7320508075688772}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"7":{"tf":1.0}},"df":3,"l":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"17":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":5,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"k":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"22":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":6,"/":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}},"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2},"2":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0}},"df":2},"4":{"docs":{"14":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,",":{"docs":{},"df":0,"x":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}}}}}},"σ":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,",":{"docs":{},"df":0,"x":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}}}}}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"14":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"d":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":3}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"g":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}},"m":{"docs":{"14":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"df":3},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.7320508075688772},"12":{"tf":1.0},"13":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":7,")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"γ":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}},"4":{"docs":{},"df":0,"/":{"docs":{},"df":0,"t":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0}},"df":1}}}},"8":{"docs":{},"df":0,"/":{"docs":{},"df":0,"t":{"docs":{},"df":0,"4":{"docs":{"13":{"tf":1.0}},"df":1}}}},"[":{"docs":{},"df":0,"0":{"docs":{"13":{"tf":1.0}},"df":1},"1":{"docs":{"13":{"tf":1.4142135623730951}},"df":1},"2":{"docs":{"13":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"[":{"docs":{},"df":0,"1":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}}},"2":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}},"i":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}},"k":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.7320508075688772},"15":{"tf":1.7320508075688772},"18":{"tf":1.4142135623730951},"19":{"tf":1.0}},"df":4}}}}},"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772}},"df":1}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"20":{"tf":1.4142135623730951}},"df":3,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"20":{"tf":1.0}},"df":1}}},"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"k":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"p":{"docs":{"11":{"tf":1.4142135623730951}},"df":1},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"17":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":2.0}},"df":4,"(":{"docs":{},"df":0,"k":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951}},"df":2}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.4142135623730951},"2":{"tf":1.0},"7":{"tf":1.0}},"df":3},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"o":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0}},"df":6,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"(":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"²":{"docs":{},"df":0,")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"/":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0}},"df":1}}}},"u":{"docs":{"15":{"tf":1.0},"5":{"tf":2.0}},"df":2,")":{"docs":{},"df":0,"?":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"22":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":6,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"p":{"docs":{"3":{"tf":1.0}},"df":1},"s":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.7320508075688772},"12":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"14":{"tf":2.0},"15":{"tf":2.23606797749979},"17":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":2.0},"9":{"tf":1.7320508075688772}},"df":16,"a":{"docs":{},"df":0,"g":{"docs":{"16":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"v":{"docs":{"14":{"tf":1.0},"2":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"14":{"tf":1.0},"2":{"tf":1.0}},"df":2}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.4142135623730951}},"df":1}}}}}}}}},".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"14":{"tf":1.0}},"df":1}}},"2":{"docs":{"14":{"tf":1.0}},"df":1},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"u":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.0}},"df":3}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"2":{"tf":1.4142135623730951}},"df":2}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.0}},"df":1}}},"3":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"<":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":3}}},"u":{"docs":{},"df":0,"s":{"docs":{"11":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"<":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{"18":{"tf":1.0}},"df":1}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}},"y":{"docs":{"12":{"tf":1.0},"14":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"4":{"tf":1.0}},"df":3},"t":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":2.0},"15":{"tf":1.4142135623730951},"18":{"tf":1.7320508075688772}},"df":3}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"14":{"tf":2.0},"17":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951}},"df":3},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}},"x":{"docs":{"1":{"tf":1.0},"14":{"tf":2.23606797749979},"2":{"tf":1.0},"6":{"tf":2.0}},"df":4,",":{"docs":{},"df":0,"z":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}},".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"v":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}},"2":{"docs":{"6":{"tf":1.4142135623730951}},"df":1},"_":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}},"·":{"docs":{},"df":0,"z":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":3}},"‖":{"docs":{},"df":0,"‖":{"docs":{},"df":0,"z":{"docs":{"2":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}},"y":{"docs":{"12":{"tf":2.23606797749979},"13":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"k":{"docs":{},"df":0,"j":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"8":{"tf":1.0}},"df":1},"z":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"i":{"docs":{"12":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"z":{"docs":{"1":{"tf":1.7320508075688772},"14":{"tf":2.23606797749979},"2":{"tf":1.0},"6":{"tf":2.23606797749979}},"df":4,")":{"docs":{},"df":0,"?":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},",":{"docs":{},"df":0,"z":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}},".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"v":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}},"5":{"docs":{"6":{"tf":1.4142135623730951}},"df":1},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"14":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"4":{"tf":1.0},"8":{"tf":1.0}},"df":14,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":15}}}}},"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"z":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"8":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0},"14":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"3":{"tf":1.0}},"df":1}}}},"z":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"k":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}}}}}}},"{":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}},"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"k":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}},"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":5,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}}}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"breadcrumbs":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"a":{"docs":{"6":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{"21":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"10":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}},"df":7}}}}},"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0}},"df":2}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"9":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"2":{"tf":1.0}},"df":1}}}},"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.4142135623730951},"15":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":4}}}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"5":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"d":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"20":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"m":{"docs":{"3":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0}},"df":2}}}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}}}}}}},"k":{"docs":{},"df":0,"^":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":9}}}}},"r":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"w":{"docs":{"13":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}},"df":7}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":4}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"k":{"docs":{"15":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":2}}}}}}},"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"9":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":4},"u":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":4}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":4}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":2}}},"w":{"docs":{},"df":0,"o":{"docs":{"5":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}},"title":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"a":{"docs":{"6":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{"21":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"10":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"9":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"2":{"tf":1.0}},"df":1}}}},"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"15":{"tf":1.0}},"df":2}}}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"5":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"d":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"20":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"m":{"docs":{"3":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}},"k":{"docs":{},"df":0,"^":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0}},"df":4}}}}},"r":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"w":{"docs":{"13":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"k":{"docs":{"15":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"9":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"11":{"tf":1.0},"8":{"tf":1.0}},"df":2},"u":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"o":{"docs":{"5":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}},"documentStore":{"save":true,"docs":{"0":{"body":"zonal is a toolkit for a specific, quantitative question: how close is the\\nneural tangent kernel (NTK) of an infinitely wide, fully connected ReLU\\nnetwork to the classical exponential kernels? Restricted to the unit hypersphere, both the NTK and the Laplace kernel are zonal — functions of the inner product t = x·z alone — so both diagonalize\\nin the spherical harmonics and are completely described by one eigenvalue per\\nfrequency. The library computes those eigenvalues and exposes the facts that\\nmake the comparison sharp: the NTK and the Laplace kernel both have spectra decaying like k^(-d) on S^(d-1), while the Gaussian kernel’s spectrum decays exponentially; gradient descent with either kernel therefore needs on the order of k^d\\nsteps to learn a frequency- k harmonic, and exponentially many with the\\nGaussian kernel; off the sphere, the bias-free NTK is homogeneous of order 1 and its bias\\ncomponent of order 0, which pins the eigenfunctions down to radially scaled\\nspherical harmonics of the form (a·r + b)·Y_kj. Every chapter of this guide is backed by runnable snippets (they execute as\\ndoc-tests, so the guide cannot drift from the library), and every claim above\\nis enforced numerically by the crate’s acceptance suite: cargo test -p zonal --test acceptance -- --nocapture The pieces: Module What it holds zonal::kernels Laplace / Gaussian / γ-exponential kernels, homogeneous variants, Gram matrices zonal::ntk the exact fully connected ReLU NTK recursion, closed forms, bias decomposition zonal::spectral Funk–Hecke quadrature, circle Fourier coefficients, decay slopes, the Bessel-integral cross-check, disk eigenfunction analysis zonal::regression kernel ridge regression and the gradient-descent learning-time simulator zonal::cexp hierarchical convolutional exponential kernels and kernel-to-NTK fitting zonal::data CSV ingestion, normalization, seeded sphere/disk samplers A command-line binary ( zonal) drives the same machinery and writes CSV/JSON\\nartifacts with a manifest per run; see The command line.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"The γ-exponential family is k(x, z) = exp(-c‖x - z‖^γ) with inverse width c > 0 and exponent 0 < γ ≤ 2. Two members have names of their own: γ = 1\\nis the Laplace kernel and γ = 2 the Gaussian. On the unit sphere ‖x - z‖² = 2 - 2 x·z, so the family is zonal there — a\\nfunction of the cosine alone. The crate supports two width conventions for\\nthat restriction: chord (the default): k(t) = exp(-c (2 - 2t)^(γ/2)), literally the\\nambient kernel evaluated on the sphere; angular: k(t) = exp(-c (1 - t)^(γ/2)). They differ only by rescaling the width; for the Laplace kernel c_angular = √2 · c_chord. #![allow(unused)] fn main() {\\nuse zonal::kernels::{ZonalKernel, ZonalKernelSpec}; let chord = ZonalKernelSpec::laplace(1.0)?;\\nassert!((chord.eval_cos(1.0)? - 1.0).abs() < 1e-15);\\nassert!((chord.eval_cos(-1.0)? - (-2.0f64).exp()).abs() < 1e-15); // antipodes: chord length 2 // same kernel, angular convention, width sqrt(2)\\nlet angular = ZonalKernelSpec::new( zonal::kernels::ExpFamily::Laplace, 2f64.sqrt(), None, false)?;\\nfor t in [-1.0, -0.25, 0.6, 1.0] { assert!((chord.eval_cos(t)? - angular.eval_cos(t)?).abs() < 1e-14);\\n} Ok::<(), zonal::Error>(()) }","breadcrumbs":"Exponential kernels » Exponential kernels","id":"1","title":"Exponential kernels"},"10":{"body":"For the Laplace kernel there is a second, independent route to the same\\nnumbers: its Fourier transform in the ambient space, Φ(t) = C (1 + t²/c²)^(-(d+1)/2), feeds the identity λ_k ∝ ∫_0^∞ t Φ(t) J²_{k+(d-2)/2}(t) dt with J the Bessel function of the first kind. No spherical quadrature is\\ninvolved, so agreement between the two routes validates both: #![allow(unused)] fn main() {\\nuse zonal::kernels::ZonalKernelSpec;\\nuse zonal::spectral::{harmonic_coefficients, laplace_sphere_eig}; let spectrum = harmonic_coefficients(&ZonalKernelSpec::laplace(1.0)?, 3, 10, 512)?;\\nfor k in [0usize, 3, 10] { let bessel_route = laplace_sphere_eig(3, 1.0, k, None)?; let quadrature_route = spectrum.eigenvalues[k]; assert!((bessel_route - quadrature_route).abs() <= 1e-3 * quadrature_route);\\n} Ok::<(), zonal::Error>(()) } The integrand’s large-argument tail is controlled analytically; a cap that\\nis too small for the requested accuracy is reported as a numerical error\\nrather than silently truncated.","breadcrumbs":"Spectra on the sphere » The Bessel-integral cross-check","id":"10","title":"The Bessel-integral cross-check"},"11":{"body":"Beyond exact quadrature, empirical_gram_spectrum sorts the eigenvalues of\\na Gram matrix over data, and empirical_eigenfunctions analyzes the top\\neigenvectors of a kernel over points in the unit disk: each one is projected\\nonto angular frequencies and fitted with a radial profile a·r + b. For the\\nNTK this recovers the radially-scaled-harmonic structure of its\\neigenfunctions — including, without bias, the absence of odd frequencies k ≥ 3 from the top of the spectrum: #![allow(unused)] fn main() {\\nuse zonal::data::sample_disk;\\nuse zonal::ntk::NtkConfig;\\nuse zonal::spectral::empirical_eigenfunctions; let points = sample_disk(400, 11);\\nlet report = empirical_eigenfunctions(&NtkConfig::new(2, 0.0)?, &points, 6)?;\\nlet freqs: Vec<usize> = report.radial_fit.iter().map(|f| f.frequency).collect();\\nassert!(freqs.iter().all(|&k| k < 3 || k % 2 == 0), \\"{freqs:?}\\"); Ok::<(), zonal::Error>(()) }","breadcrumbs":"Spectra on the sphere » Empirical spectra and disk eigenfunctions","id":"11","title":"Empirical spectra and disk eigenfunctions"},"12":{"body":"Kernel ridge regression solves (K + λI) α = y and predicts with f(x) = Σ_i α_i k(x, x_i). With λ → 0 the solution is the minimum-norm\\ninterpolant. #![allow(unused)] fn main() {\\nuse zonal::kernels::{AmbientKernelSpec, ZonalKernelSpec};\\nuse zonal::regression::krr_fit; let points: Vec<Vec<f64>> = (0..30).map(|j| { let t = std::f64::consts::TAU * j as f64 / 30.0; vec![t.cos(), t.sin()]\\n}).collect();\\nlet y: Vec<f64> = (0..30).map(|j| (3.0 * std::f64::consts::TAU * j as f64 / 30.0).cos()).collect(); let kernel = AmbientKernelSpec::new(ZonalKernelSpec::laplace(1.0)?, false);\\nlet model = krr_fit(kernel, &points, &y, 1e-8)?;\\nfor (p, &yi) in points.iter().zip(&y) { assert!((model.predict(p)? - yi).abs() <= 1e-5);\\n} Ok::<(), zonal::Error>(()) } The solver factorizes K + λI with Cholesky; when that fails it falls back\\nto a spectral solve (with a reported jitter of 1e-12 · trace(K)/n if no\\nridge was requested). Either way the representer residual ‖(K + λI)α - y‖ ≤ 1e-8 ‖y‖ is enforced — a Gram matrix that cannot be\\nsolved to that accuracy raises a singular-system error suggesting a ridge.","breadcrumbs":"Regression and learning times » Regression and learning times","id":"12","title":"Regression and learning times"},"13":{"body":"gd_simulate iterates f ← f - (η/n) K (f - y) on the function values at\\nthe training points and records the training error. On an equispaced circle\\ngrid the Gram matrix of a zonal kernel is circulant, so a pure-harmonic\\ntarget decays in exactly one eigenmode and the iteration count is a clean\\nmeasure of 1/λ_k. Because the NTK and Laplace spectra decay like k^(-d), doubling the target\\nfrequency multiplies the learning time by about 2^d (4 on the circle). learn_time_table packages the experiment: #![allow(unused)] fn main() {\\nuse zonal::kernels::{AmbientKernelSpec, ZonalKernelSpec};\\nuse zonal::regression::learn_time_table; let laplace = AmbientKernelSpec::new(ZonalKernelSpec::laplace(1.0)?, false);\\nlet table = learn_time_table(&laplace, 2, &[2, 4, 8], 128, None, 1e-4, 100_000, 0)?;\\nlet t: Vec<f64> = table.entries.iter().map(|r| r.iterations.unwrap() as f64).collect();\\nlet (r1, r2) = (t[1] / t[0], t[2] / t[1]);\\nassert!(r1 > 2.5 && r1 < 6.5, \\"t4/t2 = {r1}\\");\\nassert!(r2 > 2.5 && r2 < 6.5, \\"t8/t4 = {r2}\\"); Ok::<(), zonal::Error>(()) } For the Gaussian kernel the same ratios explode (its eigenvalues decay\\nexponentially), which is the spectral explanation for why wide-kernel\\nmethods stall on high-frequency targets. Entries that fail to converge by max_iter come back censored ( None) rather than as errors.","breadcrumbs":"Regression and learning times » Gradient descent and the k^d law","id":"13","title":"Gradient descent and the k^d law"},"14":{"body":"The hierarchical exponential kernel applies a normalized zonal kernel\\nrecursively over image windows, the way convolutional layers stack. For two\\nimages x, z with matching shape, level 0 holds the per-site channel dot\\nproducts; each level then forms window sums s_i = Σ_{m ∈ P} Θ_{i+m} + β²\\n(3×3 window by default, zero padding at the borders) and maps Θ\'_i = sqrt(s_i(x,x) s_i(z,z)) · k_mod( s_i(x,z) / sqrt(s_i(x,x) s_i(z,z)) ) with k_mod(t) = a + b·k(t) an affine modulation of the base kernel. After L levels the kernel value is the trace Σ_i Θ_i. #![allow(unused)] fn main() {\\nuse zonal::cexp::{cexp_eval, CExpConfig, Image};\\nuse zonal::kernels::ZonalKernelSpec; let mut cfg = CExpConfig::new(ZonalKernelSpec::laplace(1.0)?, 1, 0.0)?;\\ncfg.window = 1; // single pixel, 1x1 window: sqrt(4 · 9) · k(1) = 6\\nlet x = Image::new(1, 1, 1, vec![2.0])?;\\nlet z = Image::new(1, 1, 1, vec![3.0])?;\\nassert!((cexp_eval(&cfg, &x, &z)? - 6.0).abs() < 1e-12); Ok::<(), zonal::Error>(()) } Without bias the whole construction is homogeneous of order 2 — scaling both\\nimages by α scales the kernel by α²: #![allow(unused)] fn main() {\\nuse zonal::cexp::{cexp_eval, CExpConfig, Image};\\nuse zonal::kernels::ZonalKernelSpec; let cfg = CExpConfig::new(ZonalKernelSpec::laplace(0.5)?, 2, 0.0)?;\\nlet x = Image::new(4, 4, 1, (0..16).map(|i| 0.1 * i as f64).collect())?;\\nlet z = Image::new(4, 4, 1, (0..16).map(|i| (0.3 * i as f64).sin()).collect())?;\\nlet v = cexp_eval(&cfg, &x, &z)?;\\nlet v2 = cexp_eval(&cfg, &x.scaled(2.0), &z.scaled(2.0))?;\\nassert!((v2 - 4.0 * v).abs() < 1e-10 * v.abs()); Ok::<(), zonal::Error>(()) } cexp_gram assembles the kernel matrix over a set of images and can rescale\\nit to a unit diagonal, the usual preprocessing before classification.","breadcrumbs":"Hierarchical convolutional kernels » Hierarchical convolutional kernels","id":"14","title":"Hierarchical convolutional kernels"},"15":{"body":"The affine constants used above come from least squares: choose (a, b, c, γ) minimizing Σ_u (k_mod(u) - Θ(u))² over a grid of cosines,\\nwith Θ a target NTK. The fitter is a multi-start, Levenberg-damped\\nGauss–Newton on at most four parameters, with the width optimized in\\nlog-space. #![allow(unused)] fn main() {\\nuse zonal::cexp::{cosine_grid, fit_kernel_to_ntk};\\nuse zonal::kernels::ExpFamily;\\nuse zonal::ntk::NtkConfig; // the biased two-layer NTK is closest to a gamma-exponential with\\n// gamma close to 1.9 — between Laplace and Gaussian but nearer the latter\\nlet target = NtkConfig::new(2, 1.0)?;\\nlet fit = fit_kernel_to_ntk(ExpFamily::GammaExp, &target, &cosine_grid(200), true, 0)?;\\nlet gamma = fit.gamma.unwrap();\\nassert!(gamma > 1.5 && gamma < 2.0, \\"gamma {gamma}\\"); Ok::<(), zonal::Error>(()) } Deeper networks produce more sharply peaked kernels, so the fitted Laplace\\nwidth grows strictly with depth: #![allow(unused)] fn main() {\\nuse zonal::cexp::{cosine_grid, laplace_width_vs_depth}; let table = laplace_width_vs_depth(&[2, 4, 6], &cosine_grid(120), true, 0)?;\\nassert!(table[0].1 < table[1].1 && table[1].1 < table[2].1); Ok::<(), zonal::Error>(()) }","breadcrumbs":"Hierarchical convolutional kernels » Fitting exponential kernels to the NTK","id":"15","title":"Fitting exponential kernels to the NTK"},"16":{"body":"The zonal binary drives the library and writes plain CSV/JSON artifacts —\\nfigures are reproduced by emitting their underlying data, not by plotting.\\nEvery command takes --out PREFIX and writes its data files ( PREFIX.csv, PREFIX.json, …), a run manifest PREFIX.manifest.json (command, arguments, seed, versions,\\noutput list, wall-clock duration). Outputs are written atomically (temp file, then rename). On failure no\\npartial outputs remain; a PREFIX.failed marker holds the error message.\\nExit codes: 0 success, 1 usage error, 2 domain/data error, 3\\nnumerical failure. Set ZONAL_THREADS to bound the worker pool (default:\\nall cores); results do not depend on the thread count.","breadcrumbs":"The command line » The command line","id":"16","title":"The command line"},"17":{"body":"Harmonic spectrum of any kernel on S^(d-1), plus its decay slope: zonal spectrum \\\\ --kernel \'{\\"family\\":\\"NtkFc\\",\\"layers\\":6,\\"beta\\":0,\\"normalize\\":true}\' \\\\ --dim 2 --kmax 100 --out ntk6 ntk6.csv has columns k,lambda,multiplicity; ntk6.json carries the\\nlog-log slope over the fit window (default [10, min(100, kmax)]), its r²,\\nand the partial Mercer trace. The slope for the example above lands near\\n-1.94, and near -2.75 with --dim 3 — the k^(-d) law. Exponential kernels\\nuse {\\"family\\":\\"Laplace\\",\\"c\\":1.0,\\"chord_param\\":true,\\"homogeneous\\":false}.","breadcrumbs":"The command line » spectrum","id":"17","title":"spectrum"},"18":{"body":"Least-squares fit of an exponential kernel to an NTK, or a width-vs-depth\\nsweep: zonal fit --target-ntk \'{\\"layers\\":2,\\"beta\\":1.0}\' --family gamma-exp --affine --out gfit\\nzonal fit --target-ntk \'{\\"layers\\":2,\\"beta\\":0.0}\' --family laplace --affine \\\\ --depths 2..10 --out widths The single fit writes {family, a, b, c, gamma?, objective}; the sweep\\nwrites a layers,c CSV whose width column increases strictly with depth.","breadcrumbs":"The command line » fit","id":"18","title":"fit"},"19":{"body":"Kernel ridge regression over a CSV dataset (non-numeric columns are one-hot\\nencoded; rows with non-finite values are rejected and counted): zonal krr --kernel \'{\\"family\\":\\"Laplace\\",\\"c\\":1.0}\' \\\\ --data abalone.csv --target-col 8 --ridge 1e-6 --out model model.model.json holds the kernel spec, ridge, dual coefficients, and\\ntraining points; model.json the training diagnostics. A numerically\\nsingular system at --ridge 0 exits with code 2 and advice to add a ridge.","breadcrumbs":"The command line » krr","id":"19","title":"krr"},"2":{"body":"Off the sphere the plain family is shift-invariant. The homogeneous\\nvariant instead multiplies the zonal profile by ‖x‖‖z‖, which makes it\\nscale exactly like the bias-free NTK (order 1): #![allow(unused)] fn main() {\\nuse zonal::kernels::{AmbientKernel, AmbientKernelSpec, ZonalKernelSpec}; let base = ZonalKernelSpec::laplace(1.0)?;\\nlet plain = AmbientKernelSpec::new(base, false);\\nlet homogeneous = AmbientKernelSpec::new(base, true); // shift-invariant form: ||x - z|| = sqrt(2) here\\nlet v = plain.eval(&[1.0, 0.0], &[0.0, 1.0])?;\\nassert!((v - (-2f64.sqrt()).exp()).abs() < 1e-15); // the homogeneous kernel scales multiplicatively in each argument\\nlet unit = homogeneous.eval(&[1.0, 0.0], &[0.0, 1.0])?;\\nlet scaled = homogeneous.eval(&[2.0, 0.0], &[0.0, 3.0])?;\\nassert!((scaled - 6.0 * unit).abs() < 1e-12); // on unit vectors the two variants coincide\\nassert!((unit - v).abs() < 1e-14); Ok::<(), zonal::Error>(()) }","breadcrumbs":"Exponential kernels » Ambient evaluation and homogeneous variants","id":"2","title":"Ambient evaluation and homogeneous variants"},"20":{"body":"Gradient-descent learning times for harmonics of chosen frequencies: zonal gdsim --kernel \'{\\"family\\":\\"NtkFc\\",\\"layers\\":6,\\"beta\\":0,\\"normalize\\":true}\' \\\\ --dim 2 --freqs 2,4,8 --out times times.csv is a k,iterations table (censored entries are left empty); times.json records the step size and consecutive iteration ratios — near 2^d for NTK/Laplace, exploding for a Gaussian kernel.","breadcrumbs":"The command line » gdsim","id":"20","title":"gdsim"},"21":{"body":"Gram matrix of the hierarchical convolutional kernel over an image set. The\\nimage container is .csv (one flattened image per row) or .bin (raw\\nlittle-endian f64), with shape metadata in a sidecar at <path>.json: echo \'{\\"height\\":8,\\"width\\":8,\\"channels\\":1}\' > images.csv.json\\nzonal cexp \\\\ --config \'{\\"base\\":{\\"family\\":\\"Laplace\\",\\"c\\":0.048},\\"a\\":-11.491,\\"b\\":12.606,\\"layers\\":3,\\"beta\\":3.0}\' \\\\ --images images.csv --normalize-diagonal --out gram gram.json reports the eigenvalue range and whether the matrix is PSD\\nwithin tolerance.","breadcrumbs":"The command line » cexp","id":"21","title":"cexp"},"22":{"body":"Seeded uniform samples, byte-identical across runs with the same seed: zonal gen --sphere --dim 3 --n 1000 --seed 7 --out pts\\nzonal gen --disk --n 800 --seed 11 --out disk","breadcrumbs":"The command line » gen","id":"22","title":"gen"},"3":{"body":"gram assembles the symmetric kernel matrix over a point set (in parallel,\\nwith schedule-independent output) and exposes eigenvalue diagnostics: #![allow(unused)] fn main() {\\nuse zonal::kernels::{gram, AmbientKernelSpec, ZonalKernelSpec};\\nuse zonal::data::sample_sphere; let kernel = AmbientKernelSpec::new(ZonalKernelSpec::laplace(1.0)?, false);\\nlet points = sample_sphere(3, 50, 7);\\nlet g = gram(&kernel, &points)?;\\nlet (min_eig, max_eig) = g.eigenvalue_range();\\nassert!(min_eig >= -1e-10 * max_eig); // positive definite up to roundoff\\nassert!((g.get(4, 4) - 1.0).abs() < 1e-15); Ok::<(), zonal::Error>(()) }","breadcrumbs":"Exponential kernels » Gram matrices","id":"3","title":"Gram matrices"},"4":{"body":"The NTK of an infinitely wide, fully connected ReLU network is computed\\nexactly by a per-layer recursion over forward covariances. With the ReLU\\nconstant c_σ = 2 the self-covariances are fixed points of the layer map,\\nand one step reads λ = Σ(x,z) / sqrt(Σ(x,x) Σ(z,z)) correlation entering the layer\\nΣ\' = [λ (π - arccos λ) + sqrt(1 - λ²)] / π · sqrt(Σ(x,x) Σ(z,z))\\nΣ̇ = (π - arccos λ) / π\\nΘ\' = Θ Σ̇ + Σ\' + β² starting from Σ(x,z) = x·z and Θ = x·z + β². A network with layers\\ntotal layers runs layers - 1 steps; β scales the bias (0 disables it). #![allow(unused)] fn main() {\\nuse zonal::ntk::NtkConfig; let cfg = NtkConfig::new(2, 0.0)?;\\nlet e1 = [1.0, 0.0];\\nlet e2 = [0.0, 1.0];\\nassert!((cfg.eval(&e1, &e1)? - 2.0).abs() < 1e-15);\\nassert!((cfg.eval(&e1, &e2)? - 1.0 / std::f64::consts::PI).abs() < 1e-15); // on the sphere the kernel is zonal: a function of the cosine alone\\nassert!((cfg.eval_zonal(0.0)? - cfg.eval(&e1, &e2)?).abs() < 1e-15); Ok::<(), zonal::Error>(()) }","breadcrumbs":"The neural tangent kernel » The neural tangent kernel","id":"4","title":"The neural tangent kernel"},"5":{"body":"For two layers the recursion collapses to Θ(u) = [(2u + β²)(π - arccos u) + sqrt(1 - u²)]/π + β², which the crate\\nkeeps as an independent expression — useful as a cross-check of the\\nrecursion: #![allow(unused)] fn main() {\\nuse zonal::ntk::{two_layer_closed_form, NtkConfig}; for beta in [0.0, 0.5, 1.0] { let cfg = NtkConfig::new(2, beta)?; for i in 0..=100 { let u = -1.0 + 0.02 * i as f64; assert!((cfg.eval_zonal(u)? - two_layer_closed_form(beta, u)?).abs() <= 1e-12); }\\n} Ok::<(), zonal::Error>(()) }","breadcrumbs":"The neural tangent kernel » The two-layer closed form","id":"5","title":"The two-layer closed form"},"6":{"body":"The bias-free kernel is homogeneous of order 1: Θ(x, z) = ‖x‖‖z‖ · Θ_zonal(x̂·ẑ). Adding bias splits the kernel into that\\norder-1 part plus an order-0 bias kernel which only sees directions: #![allow(unused)] fn main() {\\nuse zonal::ntk::{bias_kernel, NtkConfig}; let full = NtkConfig::new(4, 0.7)?;\\nlet free = NtkConfig::new(4, 0.0)?;\\nlet x = [0.3, -0.8, 0.1];\\nlet z = [1.2, 0.4, -0.5]; // pointwise decomposition\\nlet sum = free.eval(&x, &z)? + bias_kernel(&full, &x, &z)?;\\nassert!((sum - full.eval(&x, &z)?).abs() < 1e-10); // the bias part ignores rescaling of either argument\\nlet x2: Vec<f64> = x.iter().map(|v| 2.0 * v).collect();\\nlet z5: Vec<f64> = z.iter().map(|v| 5.0 * v).collect();\\nlet a = bias_kernel(&full, &x, &z)?;\\nlet b = bias_kernel(&full, &x2, &z5)?;\\nassert!((a - b).abs() < 1e-10 * a.abs()); Ok::<(), zonal::Error>(()) }","breadcrumbs":"The neural tangent kernel » Homogeneity and the bias decomposition","id":"6","title":"Homogeneity and the bias decomposition"},"7":{"body":"Deeper kernels grow linearly with depth at t = 1 (each layer adds one unit\\nof trace on the sphere), so spectra of different depths are easiest to\\ncompare after dividing by the layer count. NtkConfig::normalized(L) builds\\nthe bias-free kernel with that scaling baked in: #![allow(unused)] fn main() {\\nuse zonal::ntk::NtkConfig; let cfg = NtkConfig::normalized(6)?;\\nassert!((cfg.eval_zonal(1.0)? - 1.0).abs() < 1e-12); // normalization is only defined without bias\\nassert!(NtkConfig { layers: 6, beta: 1.0, normalize: true }.validate().is_err()); Ok::<(), zonal::Error>(()) }","breadcrumbs":"The neural tangent kernel » Normalization","id":"7","title":"Normalization"},"8":{"body":"A zonal kernel on S^(d-1) expands over spherical harmonics as k(x·z) = Σ_k λ_k Σ_j Y_kj(x) Y_kj(z) = Σ_k λ_k N(d,k) G_k(x·z) where N(d,k) counts the harmonics of frequency k and G_k is the\\nGegenbauer polynomial of index (d-2)/2, normalized so G_k(1) = 1. All\\neigenvalues in this crate refer to the uniform probability measure, which\\ngives the parameterization-free trace identity Σ_k λ_k N(d,k) = k(1). The Funk–Hecke theorem turns each λ_k into a one-dimensional integral of k(t) G_k(t) against the weight (1 - t²)^((d-3)/2); the crate evaluates it\\nwith Gauss–Legendre quadrature in the substituted angle θ = arccos t, where\\nthe kernels of interest are smooth. #![allow(unused)] fn main() {\\nuse zonal::kernels::ZonalKernelSpec;\\nuse zonal::spectral::{harmonic_coefficients, multiplicity}; let laplace = ZonalKernelSpec::laplace(1.0)?;\\nlet spectrum = harmonic_coefficients(&laplace, 3, 60, 512)?; // trace identity: partial sums approach k(1) = 1 from below\\nlet trace = spectrum.partial_trace()?;\\nassert!(trace < 1.0 && trace > 0.95); // Mercer reconstruction returns the kernel pointwise\\nuse zonal::kernels::ZonalKernel;\\nlet t = 0.3;\\nassert!((spectrum.reconstruct(t)? - laplace.eval_cos(t)?).abs() < 1e-3); assert_eq!(multiplicity(3, 5)?, 11); // 2k + 1 on S^2\\nassert_eq!(multiplicity(5, 2)?, 14); Ok::<(), zonal::Error>(()) } On the circle ( d = 2) the harmonics are the Fourier basis and the same\\nmachinery reduces to cosine coefficients; use fourier_coefficients_s1.","breadcrumbs":"Spectra on the sphere » Spectra on the sphere","id":"8","title":"Spectra on the sphere"},"9":{"body":"The central comparison is the log-log slope of λ_k against k. The\\nLaplace kernel and the NTK both decay like k^(-d); the Gaussian kernel\\ndecays exponentially and its log-log slope runs away: #![allow(unused)] fn main() {\\nuse zonal::kernels::ZonalKernelSpec;\\nuse zonal::ntk::NtkConfig;\\nuse zonal::spectral::{decay_slope, fourier_coefficients_s1}; let ntk = NtkConfig::normalized(6)?;\\nlet s_ntk = fourier_coefficients_s1(&ntk, 110, 880)?;\\nlet (slope, r2) = decay_slope(&s_ntk, 10, 100)?;\\nassert!(slope < -1.65 && slope > -2.25, \\"slope {slope}\\");\\nassert!(r2 > 0.999); let laplace = ZonalKernelSpec::laplace(1.0)?;\\nlet s_lap = fourier_coefficients_s1(&laplace, 110, 880)?;\\nlet (slope_lap, _) = decay_slope(&s_lap, 10, 100)?;\\nassert!((slope - slope_lap).abs() < 0.3); Ok::<(), zonal::Error>(()) }","breadcrumbs":"Spectra on the sphere » Decay slopes","id":"9","title":"Decay slopes"}},"docInfo":{"0":{"body":207,"breadcrumbs":2,"title":1},"1":{"body":110,"breadcrumbs":4,"title":2},"10":{"body":85,"breadcrumbs":6,"title":4},"11":{"body":77,"breadcrumbs":6,"title":4},"12":{"body":97,"breadcrumbs":6,"title":3},"13":{"body":127,"breadcrumbs":7,"title":4},"14":{"body":176,"breadcrumbs":6,"title":3},"15":{"body":106,"breadcrumbs":7,"title":4},"16":{"body":74,"breadcrumbs":4,"title":2},"17":{"body":54,"breadcrumbs":3,"title":1},"18":{"body":50,"breadcrumbs":3,"title":1},"19":{"body":55,"breadcrumbs":3,"title":1},"2":{"body":83,"breadcrumbs":6,"title":4},"20":{"body":37,"breadcrumbs":3,"title":1},"21":{"body":48,"breadcrumbs":3,"title":1},"22":{"body":28,"breadcrumbs":3,"title":1},"3":{"body":52,"breadcrumbs":4,"title":2},"4":{"body":93,"breadcrumbs":6,"title":3},"5":{"body":43,"breadcrumbs":7,"title":4},"6":{"body":86,"breadcrumbs":6,"title":3},"7":{"body":54,"breadcrumbs":4,"title":1},"8":{"body":139,"breadcrumbs":4,"title":2},"9":{"body":69,"breadcrumbs":4,"title":2}},"length":23},"lang":"English"}}'));