// e^{-z} I_nu(z), 20 significant digits, generated with mpmath at 40 digits.
pub const BESSEL_I_SCALED_REF: &[(f64, f64, f64)] = &[
    (0.0, 0.001, 0.99900074958351555937),
    (0.0, 0.00133352, 0.99866781271919978395),
    (0.0, 0.00177828, 0.99822408936854936581),
    (0.0, 0.00237137, 0.99763284199620403759),
    (0.0, 0.00316228, 0.99684520685312112289),
    (0.0, 0.00421697, 0.99579633593884179725),
    (0.0, 0.00562341, 0.99440023314209704245),
    (0.0, 0.00749894, 0.99254306044401698518),
    (0.0, 0.01, 0.9900745851497074988),
    (0.0, 0.0133352, 0.98679718833706868634),
    (0.0, 0.0177828, 0.98245204600381521439),
    (0.0, 0.0237137, 0.97670255551927030023),
    (0.0, 0.0316228, 0.96911420516055369414),
    (0.0, 0.0421697, 0.95913333481593870993),
    (0.0, 0.0562341, 0.94606529728890247377),
    (0.0, 0.0749894, 0.92905806329211899427),
    (0.0, 0.1, 0.90710092578230109165),
    (0.0, 0.133352, 0.8790519846968959164),
    (0.0, 0.177828, 0.8437172343209764903),
    (0.0, 0.237137, 0.80001274948747999477),
    (0.0, 0.316228, 0.74722980837893716969),
    (0.0, 0.421697, 0.68541932566395401159),
    (0.0, 0.562341, 0.61582411103075248562),
    (0.0, 0.749894, 0.54120245713534495154),
    (0.0, 1.0, 0.4657596075936404365),
    (0.0, 1.33352, 0.39439659344087353695),
    (0.0, 1.77828, 0.33131015970899214591),
    (0.0, 2.37137, 0.27859367550947772869),
    (0.0, 3.16228, 0.23584232321310115464),
    (0.0, 4.21697, 0.20113687978427876738),
    (0.0, 5.62341, 0.17244867030824373869),
    (0.0, 7.49894, 0.14832672237753919001),
    (0.0, 10.0, 0.12783333716342860732),
    (0.0, 13.3352, 0.11031827626577484251),
    (0.0, 17.7828, 0.095291492378079478624),
    (0.0, 23.7137, 0.082366423144289334058),
    (0.0, 25.0, 0.080196773547436708422),
    (0.0, 31.6228, 0.071228645908783627647),
    (0.0, 34.9, 0.067775983779876723642),
    (0.0, 35.0, 0.067678378350413625728),
    (0.0, 35.1, 0.067581193446844954751),
    (0.0, 42.1697, 0.061618739121734790874),
    (0.0, 49.9, 0.056618562781922540786),
    (0.0, 50.1, 0.056504861943803700878),
    (0.0, 56.2341, 0.053319284167717368876),
    (0.0, 74.9894, 0.046146519217636717345),
    (0.0, 100.0, 0.039944379299096682648),
    (0.0, 133.352, 0.03457951769506697225),
    (0.0, 177.828, 0.029937541602194014367),
    (0.0, 224.0, 0.026670364549892601397),
    (0.0, 226.0, 0.026551960129940260296),
    (0.0, 237.137, 0.025920287596735291692),
    (0.0, 316.228, 0.022443048465708895599),
    (0.0, 421.697, 0.01943294839108119181),
    (0.0, 562.341, 0.016827004642916312356),
    (0.0, 600.0, 0.016290146656305981691),
    (0.0, 749.894, 0.014570772164733327744),
    (0.0, 1000.0, 0.012617240455891256586),
    (0.0, 1333.52, 0.010925744083706209495),
    (0.0, 1778.28, 0.0094610759766598036684),
    (0.0, 2371.37, 0.0081928179108590604567),
    (0.0, 3162.28, 0.0070945862824607597942),
    (0.0, 4000.0, 0.0063080284525058662403),
    (0.0, 4001.0, 0.0063072400474876093421),
    (0.0, 4216.97, 0.0061435965106848498597),
    (0.0, 5623.41, 0.0053201006164201370228),
    (0.0, 7498.94, 0.0046069910249117916719),
    (0.0, 9999.0, 0.0039896721681883195198),
    (0.0, 10000.0, 0.0039894726746047321064),
    (0.25, 0.001, 0.16481138527875486678),
    (0.25, 0.00133352, 0.17704852576014592643),
    (0.25, 0.00177828, 0.19017325103378121693),
    (0.25, 0.00237137, 0.20424049917660927195),
    (0.25, 0.00316228, 0.21930523841604432781),
    (0.25, 0.00421697, 0.23541909346235379008),
    (0.25, 0.00562341, 0.25262823354497677245),
    (0.25, 0.00749894, 0.27096894673374038175),
    (0.25, 0.01, 0.29046055201928833815),
    (0.25, 0.0133352, 0.31109665592855223968),
    (0.25, 0.0177828, 0.33283266951038306046),
    (0.25, 0.0237137, 0.35556692968231845925),
    (0.25, 0.0316228, 0.37911829742121133301),
    (0.25, 0.0421697, 0.40319201703895987327),
    (0.25, 0.0562341, 0.42734027809311283278),
    (0.25, 0.0749894, 0.45091244893741891735),
    (0.25, 0.1, 0.4729989453830049362),
    (0.25, 0.133352, 0.49238026142985185009),
    (0.25, 0.177828, 0.50749831559086707077),
    (0.25, 0.237137, 0.51648323037061074081),
    (0.25, 0.316228, 0.51728875115808806472),
    (0.25, 0.421697, 0.50799158074177056135),
    (0.25, 0.562341, 0.48729348775036191769),
    (0.25, 0.749894, 0.45516993471689630964),
    (0.25, 1.0, 0.41344199850978711202),
    (0.25, 1.33352, 0.3658526440707060399),
    (0.25, 1.77828, 0.31725484694468573741),
    (0.25, 2.37137, 0.27202712075539727861),
    (0.25, 3.16228, 0.23262559349945068885),
    (0.25, 4.21697, 0.1993650510743659793),
    (0.25, 5.62341, 0.17138228185674020693),
    (0.25, 7.49894, 0.14766111496611172145),
    (0.25, 10.0, 0.12741199270083659866),
    (0.25, 13.3352, 0.11004949653819242207),
    (0.25, 17.7828, 0.095119169461969676988),
    (0.25, 23.7137, 0.082255555204779508147),
    (0.25, 25.0, 0.080094495858064874067),
    (0.25, 31.6228, 0.071157140132222502041),
    (0.25, 34.9, 0.067714426599802326849),
    (0.25, 35.0, 0.067617087999102666441),
    (0.25, 35.1, 0.067520168001848321892),
    (0.25, 42.1697, 0.061572537931003157887),
    (0.25, 49.9, 0.056582753413026721206),
    (0.25, 50.1, 0.056469268578948792744),
    (0.25, 56.2341, 0.05328939371963437328),
    (0.25, 74.9894, 0.046127162748252051688),
    (0.25, 100.0, 0.039931835556842864589),
    (0.25, 133.352, 0.034571384580605097402),
    (0.25, 177.828, 0.029932266212417196071),
    (0.25, 224.0, 0.026666635711280053355),
    (0.25, 226.0, 0.026548280768703239245),
    (0.25, 237.137, 0.025916864802889527468),
    (0.25, 316.228, 0.022440827210137549992),
    (0.25, 421.697, 0.01943150664744881953),
    (0.25, 562.341, 0.016826068738008117084),
    (0.25, 600.0, 0.01628929752499375611),
    (0.25, 749.894, 0.014570164570638619741),
    (0.25, 1000.0, 0.012616845975937635407),
    (0.25, 1333.52, 0.010925487954349062799),
    (0.25, 1778.28, 0.0094609096703381327344),
    (0.25, 2371.37, 0.0081927099235440823366),
    (0.25, 3162.28, 0.0070945161622335296902),
    (0.25, 4000.0, 0.0063079791650642973914),
    (0.25, 4001.0, 0.0063071907785249335972),
    (0.25, 4216.97, 0.0061435509781226340944),
    (0.25, 5623.41, 0.0053200710494016742321),
    (0.25, 7498.94, 0.0046069718251622083214),
    (0.25, 9999.0, 0.0039896596986118054484),
    (0.25, 10000.0, 0.0039894602068986837446),
    (0.5, 0.001, 0.025206110707457800594),
    (0.5, 0.00133352, 0.029097844362743030216),
    (0.5, 0.00177828, 0.033586756463446699534),
    (0.5, 0.00237137, 0.038762364070062503597),
    (0.5, 0.00316228, 0.04472677505098478385),
    (0.5, 0.00421697, 0.05159530660014297695),
    (0.5, 0.00562341, 0.059497676896347394217),
    (0.5, 0.00749894, 0.068578395984295410094),
    (0.5, 0.01, 0.078995864259768000118),
    (0.5, 0.0133352, 0.090920391269260890666),
    (0.5, 0.0177828, 0.10452978345690259404),
    (0.5, 0.0237137, 0.12000012428038564066),
    (0.5, 0.0316228, 0.13749249556521603773),
    (0.5, 0.0421697, 0.15712849761076019538),
    (0.5, 0.0562341, 0.17895615723628861946),
    (0.5, 0.0749894, 0.20289879975293035003),
    (0.5, 0.1, 0.22868316607552338863),
    (0.5, 0.133352, 0.25574796530027553609),
    (0.5, 0.177828, 0.28313720519750194612),
    (0.5, 0.237137, 0.30939634470676178819),
    (0.5, 0.316228, 0.33252049881607159195),
    (0.5, 0.421697, 0.35002239730214407188),
    (0.5, 0.562341, 0.35922876337455641674),
    (0.5, 0.749894, 0.35787547705668249883),
    (0.5, 1.0, 0.34495131388824462599),
    (0.5, 1.33352, 0.32147448177685769299),
    (0.5, 1.77828, 0.29062725324854487277),
    (0.5, 2.37137, 0.25680829988858257297),
    (0.5, 3.16228, 0.22393968249274168002),
    (0.5, 4.21697, 0.19422959300676594714),
    (0.5, 5.62341, 0.16823041813644195831),
    (0.5, 7.49894, 0.14568337474488895055),
    (0.5, 10.0, 0.12615662584097981553),
    (0.5, 13.3352, 0.10924719602283768506),
    (0.5, 17.7828, 0.094604107689161471817),
    (0.5, 23.7137, 0.08192385970140383663),
    (0.5, 25.0, 0.079788456080286535588),
    (0.5, 31.6228, 0.070943058057105026098),
    (0.5, 34.9, 0.067530093703782910944),
    (0.5, 35.0, 0.067433553134473544039),
    (0.5, 35.1, 0.06733742542611026311),
    (0.5, 42.1697, 0.061434143824608934178),
    (0.5, 49.9, 0.056475462082862611236),
    (0.5, 50.1, 0.056362623884057378),
    (0.5, 56.2341, 0.053199823493322715763),
    (0.5, 74.9894, 0.046069142263935706562),
    (0.5, 100.0, 0.039894228040143267794),
    (0.5, 133.352, 0.034546996741995825444),
    (0.5, 177.828, 0.029916445630559904201),
    (0.5, 224.0, 0.026655452327865385101),
    (0.5, 226.0, 0.026537245748401270528),
    (0.5, 237.137, 0.02590659913685179041),
    (0.5, 316.228, 0.022434164763801157555),
    (0.5, 421.697, 0.019427182058813202761),
    (0.5, 562.341, 0.016823261335783532972),
    (0.5, 600.0, 0.016286750396763997386),
    (0.5, 749.894, 0.01456834194043628027),
    (0.5, 1000.0, 0.012615662610100800241),
    (0.5, 1333.52, 0.010924719602312318518),
    (0.5, 1778.28, 0.0094604107689161510991),
    (0.5, 2371.37, 0.0081923859701403837366),
    (0.5, 3162.28, 0.007094305805710502562),
    (0.5, 4000.0, 0.0063078313050504001206),
    (0.5, 4001.0, 0.0063070429739462718112),
    (0.5, 4216.97, 0.0061434143824608931487),
    (0.5, 5623.41, 0.0053199823493322715494),
    (0.5, 7498.94, 0.0046069142263935708832),
    (0.5, 9999.0, 0.0039896222901161098145),
    (0.5, 10000.0, 0.0039894228040143267794),
    (1.0, 0.001, 0.00049950031235422134737),
    (1.0, 0.00133352, 0.0006658716027957623815),
    (1.0, 0.00177828, 0.00088756061598182688707),
    (1.0, 0.00237137, 0.0011828774647889611883),
    (1.0, 0.00316228, 0.0015761498601743240417),
    (1.0, 0.00421697, 0.0020996169702424411901),
    (1.0, 0.00562341, 0.0027959490555950973726),
    (1.0, 0.00749894, 0.0037214842696139782108),
    (1.0, 0.01, 0.0049503110471182757076),
    (1.0, 0.0133352, 0.0065794226837053994164),
    (1.0, 0.0177828, 0.008735028843826460181),
    (1.0, 0.0237137, 0.011579801741891847609),
    (1.0, 0.0316228, 0.015321137278274529285),
    (1.0, 0.0421697, 0.020218688507295744366),
    (1.0, 0.0562341, 0.026590056021397612092),
    (1.0, 0.0749894, 0.034810290029900323324),
    (1.0, 0.1, 0.045298446808809327277),
    (1.0, 0.133352, 0.05848177046380988014),
    (1.0, 0.177828, 0.074723292644409163018),
    (1.0, 0.237137, 0.094195732821923133667),
    (1.0, 0.316228, 0.11669484632369782201),
    (1.0, 0.421697, 0.14139956322458706338),
    (1.0, 0.562341, 0.16664930491262948768),
    (1.0, 0.749894, 0.18987739400956541003),
    (1.0, 1.0, 0.20791041534970844887),
    (1.0, 1.33352, 0.21778758745464586135),
    (1.0, 1.77828, 0.21793254746263039079),
    (1.0, 2.37137, 0.20901490913254842266),
    (1.0, 3.16228, 0.19369764784693471214),
    (1.0, 4.21697, 0.17526576214662871065),
    (1.0, 5.62341, 0.15625226929147548671),
    (1.0, 7.49894, 0.13804983106095137812),
    (1.0, 10.0, 0.12126268138445551872),
    (1.0, 13.3352, 0.10609774424446221512),
    (1.0, 17.7828, 0.092572178901395792812),
    (1.0, 23.7137, 0.080610601952670217253),
    (1.0, 25.0, 0.078576113319292772028),
    (1.0, 31.6228, 0.070093222930925538533),
    (1.0, 34.9, 0.06679781674181877384),
    (1.0, 35.0, 0.066704431729491439079),
    (1.0, 35.1, 0.066611436977506934834),
    (1.0, 42.1697, 0.060883696640298265565),
    (1.0, 49.9, 0.056048341406017227977),
    (1.0, 50.1, 0.0559380691943607502),
    (1.0, 56.2341, 0.052843054774000099095),
    (1.0, 74.9894, 0.045837792529581959344),
    (1.0, 100.0, 0.039744153025130252674),
    (1.0, 133.352, 0.03444961774178552749),
    (1.0, 177.828, 0.029853247036204887153),
    (1.0, 224.0, 0.0266107657454250556),
    (1.0, 226.0, 0.026493151584282866999),
    (1.0, 237.137, 0.025865577176437714269),
    (1.0, 316.228, 0.022407534773646704631),
    (1.0, 421.697, 0.019409893334376064),
    (1.0, 562.341, 0.016812036412993324735),
    (1.0, 600.0, 0.016276565868339667449),
    (1.0, 749.894, 0.014561053700345964376),
    (1.0, 1000.0, 0.01261093025692862947),
    (1.0, 1333.52, 0.010921646734618169389),
    (1.0, 1778.28, 0.0094584154263490144922),
    (1.0, 2371.37, 0.0081910902846351171975),
    (1.0, 3162.28, 0.0070934644419950529981),
    (1.0, 4000.0, 0.0063072398996555055386),
    (1.0, 4001.0, 0.0063064517902706630237),
    (1.0, 4216.97, 0.0061428680301863238657),
    (1.0, 5623.41, 0.0053196275638440077369),
    (1.0, 7498.94, 0.0046066838385205502446),
    (1.0, 9999.0, 0.0039894726596409675128),
    (1.0, 10000.0, 0.0039892731959836622645),
    (2.5, 0.001, 1.6804072204584046375e-9),
    (2.5, 0.00133352, 3.4495985066790617875e-9),
    (2.5, 0.00177828, 7.0807125418165611221e-9),
    (2.5, 0.00237137, 1.4531732919897851886e-8),
    (2.5, 0.00316228, 2.9817865761628985108e-8),
    (2.5, 0.00421697, 6.116728805051943102e-8),
    (2.5, 0.00562341, 1.2543159349031282056e-7),
    (2.5, 0.00749894, 2.5709492007378516067e-7),
    (2.5, 0.01, 5.2663407950484642876e-7),
    (2.5, 0.0133352, 1.077858495207541773e-6),
    (2.5, 0.0177828, 2.2036164230654496564e-6),
    (2.5, 0.0237137, 4.498480280068834293e-6),
    (2.5, 0.0316228, 9.1653070519529184307e-6),
    (2.5, 0.0421697, 0.000018624781066988242116),
    (2.5, 0.0562341, 0.000037715868233904621438),
    (2.5, 0.0749894, 0.000076024829169026924891),
    (2.5, 0.1, 0.00015231039343849566541),
    (2.5, 0.133352, 0.00030268100010977558248),
    (2.5, 0.177828, 0.00059511400303040267887),
    (2.5, 0.237137, 0.0011537281068908059638),
    (2.5, 0.316228, 0.0021959031447042953251),
    (2.5, 0.421697, 0.0040805439406064163161),
    (2.5, 0.562341, 0.007352106618897536813),
    (2.5, 0.749894, 0.012736232170671035634),
    (2.5, 1.0, 0.021005514809116314286),
    (2.5, 1.33352, 0.032629900909704431184),
    (2.5, 1.77828, 0.047240386971400189571),
    (2.5, 2.37137, 0.063213435099803237313),
    (2.5, 3.16228, 0.077911133789757089869),
    (2.5, 4.21697, 0.088759309294867012346),
    (2.5, 5.62341, 0.094439574640441515501),
    (2.5, 7.49894, 0.095173728693235301254),
    (2.5, 10.0, 0.092094336707898353207),
    (2.5, 13.3352, 0.086513048070797252266),
    (2.5, 17.7828, 0.079541665971522386953),
    (2.5, 23.7137, 0.071996793855351332755),
    (2.5, 25.0, 0.070596825939837526688),
    (2.5, 31.6228, 0.064425642467023965858),
    (2.5, 34.9, 0.061891543503312699439),
    (2.5, 35.0, 0.061818677689807175475),
    (2.5, 35.1, 0.06174605959215511693),
    (2.5, 42.1697, 0.05716729020171228376),
    (2.5, 49.9, 0.053148186173305643473),
    (2.5, 50.1, 0.053054981883379431877),
    (2.5, 56.2341, 0.050412167172395340496),
    (2.5, 74.9894, 0.044250693248205250871),
    (2.5, 100.0, 0.038709369467351012741),
    (2.5, 133.352, 0.033775626296804908085),
    (2.5, 177.828, 0.02941458630891937708),
    (2.5, 224.0, 0.026300053380014979675),
    (2.5, 226.0, 0.026186540116006978539),
    (2.5, 237.137, 0.025580239036022935401),
    (2.5, 316.228, 0.02222200877105317653),
    (2.5, 421.697, 0.019289302635879062316),
    (2.5, 562.341, 0.016733671505808978427),
    (2.5, 600.0, 0.016205452367700150433),
    (2.5, 749.894, 0.014510138055331967389),
    (2.5, 1000.0, 0.012577853469258328143),
    (2.5, 1333.52, 0.010900160854315560527),
    (2.5, 1778.28, 0.0094444598093528329482),
    (2.5, 2371.37, 0.0081820262229087537185),
    (2.5, 3162.28, 0.0070875776895497950324),
    (2.5, 4000.0, 0.0063031016142899820175),
    (2.5, 4001.0, 0.0063023150559702949692),
    (2.5, 4216.97, 0.0061390449246148258738),
    (2.5, 5623.41, 0.0053171447278673892966),
    (2.5, 7498.94, 0.0046050714459935397957),
    (2.5, 9999.0, 0.0039884254034410462426),
    (2.5, 10000.0, 0.0039882260968558066018),
    (7.0, 0.001, 1.5485499303263597325e-27),
    (7.0, 0.00133352, 1.160852691692409123e-26),
    (7.0, 0.00177828, 8.7013822631494339694e-26),
    (7.0, 0.00237137, 6.5211613625769222271e-25),
    (7.0, 0.00316228, 4.8863944068866568647e-24),
    (7.0, 0.00421697, 3.6604283330569967132e-23),
    (7.0, 0.00562341, 2.7410436347686872238e-22),
    (7.0, 0.00749894, 2.05164709776881262e-21),
    (7.0, 0.01, 1.5346802574082275525e-20),
    (7.0, 0.0133352, 1.1470100907956245936e-19),
    (7.0, 0.0177828, 8.5633130785562237369e-19),
    (7.0, 0.0237137, 6.3835703098910181311e-18),
    (7.0, 0.0316228, 4.7494323654943371118e-17),
    (7.0, 0.0421697, 3.5243021919349576434e-16),
    (7.0, 0.0562341, 2.606024496746749668e-15),
    (7.0, 0.0749894, 1.9180833752527815416e-14),
    (7.0, 0.1, 1.4030261331300012835e-13),
    (7.0, 0.133352, 1.0178494025120851564e-12),
    (7.0, 0.177828, 7.3039860488349145565e-12),
    (7.0, 0.237137, 5.1657165100564489908e-11),
    (7.0, 0.316228, 3.5841205180183228366e-10),
    (7.0, 0.421697, 2.4245719845686775284e-9),
    (7.0, 0.562341, 1.5864468758116142249e-8),
    (7.0, 0.749894, 9.9382132281819356107e-8),
    (7.0, 1.0, 5.8831950920540457859e-7),
    (7.0, 1.33352, 3.2379945721768819069e-6),
    (7.0, 1.77828, 0.000016246067879338424088),
    (7.0, 2.37137, 0.000072622758638699216007),
    (7.0, 3.16228, 0.00028213381977878880107),
    (7.0, 4.21697, 0.00092972072587020464024),
    (7.0, 5.62341, 0.002549239028478285556),
    (7.0, 7.49894, 0.0057644963101966390058),
    (7.0, 10.0, 0.01080634483049488614),
    (7.0, 13.3352, 0.017113710222008764218),
    (7.0, 17.7828, 0.023525628264128449231),
    (7.0, 23.7137, 0.028890011238824334259),
    (7.0, 25.0, 0.029697213576454164824),
    (7.0, 31.6228, 0.032520876807901104199),
    (7.0, 34.9, 0.033326644622460884264),
    (7.0, 35.0, 0.033346734221516532374),
    (7.0, 35.1, 0.033366583955850173309),
    (7.0, 42.1697, 0.034272062526130675979),
    (7.0, 49.9, 0.034507475540109485909),
    (7.0, 50.1, 0.034506785689216298134),
    (7.0, 56.2341, 0.034372608832529251615),
    (7.0, 74.9894, 0.033219749443482890515),
    (7.0, 100.0, 0.031229165630467613268),
    (7.0, 133.352, 0.028757132977152012165),
    (7.0, 177.828, 0.026074765619274189149),
    (7.0, 224.0, 0.023901511415665504102),
    (7.0, 226.0, 0.023818540196024135331),
    (7.0, 237.137, 0.023371069619616739117),
    (7.0, 316.228, 0.020767420725279787127),
    (7.0, 421.697, 0.018334851238872865822),
    (7.0, 562.341, 0.016109012486682125904),
    (7.0, 600.0, 0.01563783765433939961),
    (7.0, 749.894, 0.014102114549611936897),
    (7.0, 1000.0, 0.012311724329574369804),
    (7.0, 1333.52, 0.010726770868561129053),
    (7.0, 1778.28, 0.0093315851627710587877),
    (7.0, 2371.37, 0.0081085912974231549742),
    (7.0, 3162.28, 0.0070398242191353907377),
    (7.0, 4000.0, 0.0062695050702541902016),
    (7.0, 4001.0, 0.0062687310790373751616),
    (7.0, 4216.97, 0.0061080023686674260034),
    (7.0, 5623.41, 0.0052969704402162313361),
    (7.0, 7498.94, 0.0045919629552857015412),
    (7.0, 9999.0, 0.0039799079731411356597),
    (7.0, 10000.0, 0.0039797099430154565884),
    (14.5, 0.001, 4.0718825735515913052e-60),
    (14.5, 0.00133352, 2.6432828708533209055e-58),
    (14.5, 0.00177828, 1.7157710935669135077e-56),
    (14.5, 0.00237137, 1.1134990698810999438e-54),
    (14.5, 0.00316228, 7.2253834737246526772e-53),
    (14.5, 0.00421697, 4.6871156105751100624e-51),
    (14.5, 0.00562341, 3.0393722686931574063e-49),
    (14.5, 0.00749894, 1.9700235617198336275e-47),
    (14.5, 0.01, 1.2761075798207697395e-45),
    (14.5, 0.0133352, 8.2590978490619508678e-44),
    (14.5, 0.0177828, 5.3396263187079026727e-42),
    (14.5, 0.0237137, 3.4468699838758791188e-40),
    (14.5, 0.0316228, 2.220790491594929107e-38),
    (14.5, 0.0421697, 1.4270373379630469507e-36),
    (14.5, 0.0562341, 9.1374682860958022999e-35),
    (14.5, 0.0749894, 5.8237092234252133673e-33),
    (14.5, 0.1, 3.6886727857765145751e-31),
    (14.5, 0.133352, 2.3170387367256440442e-29),
    (14.5, 0.177828, 1.4395389130544682481e-27),
    (14.5, 0.237137, 8.8130512473576988707e-26),
    (14.5, 0.316228, 5.2917407395484576007e-24),
    (14.5, 0.421697, 3.0962912309665904579e-22),
    (14.5, 0.562341, 1.750729498600588324e-20),
    (14.5, 0.749894, 9.46217388356407777e-19),
    (14.5, 1.0, 4.81877203167194676e-17),
    (14.5, 1.33352, 2.2700110153303781678e-15),
    (14.5, 1.77828, 9.6616500875456384361e-14),
    (14.5, 2.37137, 3.6068637993220542827e-12),
    (14.5, 3.16228, 1.1391549808588311855e-10),
    (14.5, 4.21697, 2.9163174419084108403e-9),
    (14.5, 5.62341, 5.7706162134689442157e-8),
    (14.5, 7.49894, 8.4089952475286436157e-7),
    (14.5, 10.0, 8.652563669591419032e-6),
    (14.5, 13.3352, 0.000061252625097260154035),
    (14.5, 17.7828, 0.00029789184797919508238),
    (14.5, 23.7137, 0.001020719634807408172),
    (14.5, 25.0, 0.0012359949939489244952),
    (14.5, 31.6228, 0.0025786543244969227075),
    (14.5, 34.9, 0.0033345423639847724238),
    (14.5, 35.0, 0.0033581074939227638603),
    (14.5, 35.1, 0.0033816942077932878767),
    (14.5, 42.1697, 0.005069189829890732813),
    (14.5, 49.9, 0.0068441601048653605767),
    (14.5, 50.1, 0.0068880341731477581348),
    (14.5, 56.2341, 0.0081714232736032010838),
    (14.5, 74.9894, 0.011301872315443852826),
    (14.5, 100.0, 0.013912814154688007278),
    (14.5, 133.352, 0.015685645112854019356),
    (14.5, 177.828, 0.016553742839657335931),
    (14.5, 224.0, 0.016665791301593347122),
    (14.5, 226.0, 0.016661091324822683973),
    (14.5, 237.137, 0.016625165580286750649),
    (14.5, 316.228, 0.016088070894705508189),
    (14.5, 421.697, 0.01514102603451729739),
    (14.5, 562.341, 0.013955687853335363999),
    (14.5, 600.0, 0.013670146797568310014),
    (14.5, 749.894, 0.012663728892884657672),
    (14.5, 1000.0, 0.011357614461092890571),
    (14.5, 1333.52, 0.010097221932849477704),
    (14.5, 1778.28, 0.0089178394242472949375),
    (14.5, 2371.37, 0.0078374833273277872892),
    (14.5, 3162.28, 0.0068625794125358923734),
    (14.5, 4000.0, 0.0061443850967472983563),
    (14.5, 4001.0, 0.0061436575100795162705),
    (14.5, 4216.97, 0.0059923182236725160806),
    (14.5, 5623.41, 0.0052215609554075502428),
    (14.5, 7498.94, 0.0045428535932353683064),
    (14.5, 9999.0, 0.0039479442044723909256),
    (14.5, 10000.0, 0.0039477509482903249683),
    (14.99, 0.001, 2.5854082782625604342e-62),
    (14.99, 0.00133352, 1.9325347092761533366e-60),
    (14.99, 0.00177828, 1.4444193800324214043e-58),
    (14.99, 0.00237137, 1.0793776345688171409e-56),
    (14.99, 0.00316228, 8.0648249780953170897e-55),
    (14.99, 0.00421697, 6.0240671275507522183e-53),
    (14.99, 0.00562341, 4.4979814173340587895e-51),
    (14.99, 0.00749894, 3.3570301291301067843e-49),
    (14.99, 0.01, 2.5039240810335593214e-47),
    (14.99, 0.0133352, 1.8660197447520271544e-45),
    (14.99, 0.0177828, 1.3891359726665351982e-43),
    (14.99, 0.0237137, 1.0325434568663119695e-41),
    (14.99, 0.0316228, 7.6602231672770446726e-40),
    (14.99, 0.0421697, 5.6678597529338948672e-38),
    (14.99, 0.0562341, 4.1788710579469535774e-36),
    (14.99, 0.0749894, 3.066777767743829933e-34),
    (14.99, 0.1, 2.2366698068987540154e-32),
    (14.99, 0.133352, 1.617756446051283664e-30),
    (14.99, 0.177828, 1.1573123351991924013e-28),
    (14.99, 0.237137, 8.1582645306420215807e-27),
    (14.99, 0.316228, 5.6404160993922089224e-25),
    (14.99, 0.421697, 3.800036615208367232e-23),
    (14.99, 0.562341, 2.4739160983560358619e-21),
    (14.99, 0.749894, 1.539409423823669273e-19),
    (14.99, 1.0, 9.0251808932558389557e-18),
    (14.99, 1.33352, 4.8936268977580449298e-16),
    (14.99, 1.77828, 2.3966766405541686137e-14),
    (14.99, 2.37137, 1.02900047972057371e-12),
    (14.99, 3.16228, 3.7342180762432177453e-11),
    (14.99, 4.21697, 1.0967137033124322984e-9),
    (14.99, 5.62341, 2.4828474679973025036e-8),
    (14.99, 7.49894, 4.1210791477823866458e-7),
    (14.99, 10.0, 4.7965173243074594757e-6),
    (14.99, 13.3352, 0.000038021257581873830382),
    (14.99, 17.7828, 0.00020432409173982450875),
    (14.99, 23.7137, 0.00076179102653935905089),
    (14.99, 25.0, 0.00093523915935546494022),
    (14.99, 31.6228, 0.002061247226450244753),
    (14.99, 34.9, 0.0027195014777156632029),
    (14.99, 35.0, 0.0027402475078895816002),
    (14.99, 35.1, 0.002761025288342388678),
    (14.99, 42.1697, 0.0042772553700974814267),
    (14.99, 49.9, 0.005925552059380091421),
    (14.99, 50.1, 0.0059669044948498359841),
    (14.99, 56.2341, 0.0071886437170823145926),
    (14.99, 74.9894, 0.010263605389666041885),
    (14.99, 100.0, 0.01294179280095909582),
    (14.99, 133.352, 0.014857030682964747121),
    (14.99, 177.828, 0.015893577226055006573),
    (14.99, 224.0, 0.016136031091857795236),
    (14.99, 226.0, 0.016136096317979349563),
    (14.99, 237.137, 0.016125551013377773081),
    (14.99, 316.228, 0.015724225751018640645),
    (14.99, 421.697, 0.014883569557710615868),
    (14.99, 562.341, 0.013777392521147412919),
    (14.99, 600.0, 0.013506402125378114746),
    (14.99, 749.894, 0.012542229907359652619),
    (14.99, 1000.0, 0.011275813040534258012),
    (14.99, 1333.52, 0.010042643520190983799),
    (14.99, 1778.28, 0.0088816705202949629377),
    (14.99, 2371.37, 0.0078136356878156702003),
    (14.99, 3162.28, 0.0068469155480272250327),
    (14.99, 4000.0, 0.0061332953815633777247),
    (14.99, 4001.0, 0.0061325718773223603615),
    (14.99, 4216.97, 0.0059820590165529558615),
    (14.99, 5623.41, 0.0052148559274367040558),
    (14.99, 7498.94, 0.0045384784811278595127),
    (14.99, 9999.0, 0.0039450923986457749931),
    (14.99, 10000.0, 0.0039448995671403816568),
    (15.0, 0.001, 2.3313966399423715856e-62),
    (15.0, 0.00133352, 1.7476897103703815756e-60),
    (15.0, 0.00177828, 1.3100272797231686203e-58),
    (15.0, 0.00237137, 9.8177154198014773922e-57),
    (15.0, 0.00316228, 7.3566819582293746485e-55),
    (15.0, 0.00421697, 5.5109546712350265267e-53),
    (15.0, 0.00562341, 4.1267169843780718209e-51),
    (15.0, 0.00749894, 3.0888176393610672204e-49),
    (15.0, 0.01, 2.3105117831883006139e-47),
    (15.0, 0.0133352, 1.7268446147289550584e-45),
    (15.0, 0.0177828, 1.2892341151380593336e-43),
    (15.0, 0.0237137, 9.6104862337533250658e-42),
    (15.0, 0.0316228, 7.1503689656610697689e-40),
    (15.0, 0.0421697, 5.3058641246840659625e-38),
    (15.0, 0.0562341, 3.9232500244731270236e-36),
    (15.0, 0.0749894, 2.8874821776850227567e-34),
    (15.0, 0.1, 2.1119754420108805052e-32),
    (15.0, 0.133352, 1.5319693977369997876e-30),
    (15.0, 0.177828, 1.0991006899503036317e-28),
    (15.0, 0.237137, 7.7702424299787528693e-27),
    (15.0, 0.316228, 5.3876298889752718913e-25),
    (15.0, 0.421697, 3.6401900905514702584e-23),
    (15.0, 0.562341, 2.3766796843952510812e-21),
    (15.0, 0.749894, 1.4831626702327182254e-19),
    (15.0, 1.0, 8.7204462262271362854e-18),
    (15.0, 1.33352, 4.7419869289014977765e-16),
    (15.0, 1.77828, 2.3290730629980810037e-14),
    (15.0, 2.37137, 1.0028336923413446572e-12),
    (15.0, 3.16228, 3.6495963737243524206e-11),
    (15.0, 4.21697, 1.0748716172612323417e-9),
    (15.0, 5.62341, 2.440103702632638055e-8),
    (15.0, 7.49894, 4.06093236640596737e-7),
    (15.0, 10.0, 4.7384583472582897804e-6),
    (15.0, 13.3352, 0.000037648332748580754032),
    (15.0, 17.7828, 0.00020273602478576475143),
    (15.0, 23.7137, 0.00075718754713956289729),
    (15.0, 25.0, 0.00092985177456918866935),
    (15.0, 31.6228, 0.0020516995083969053226),
    (15.0, 34.9, 0.0027080290771547196284),
    (15.0, 35.0, 0.0027287190770891901122),
    (15.0, 35.1, 0.0027494410033579087692),
    (15.0, 42.1697, 0.004262212499437898033),
    (15.0, 49.9, 0.0059078630188187774351),
    (15.0, 50.1, 0.0059491616004892350664),
    (15.0, 56.2341, 0.0071695586129254865065),
    (15.0, 74.9894, 0.010243103592921424205),
    (15.0, 100.0, 0.012922377256052429763),
    (15.0, 133.352, 0.014840306505770552158),
    (15.0, 177.828, 0.015880159131606633128),
    (15.0, 224.0, 0.016125216872807082006),
    (15.0, 226.0, 0.01612537779517633221),
    (15.0, 237.137, 0.016115342768409350966),
    (15.0, 316.228, 0.01571676234761593522),
    (15.0, 421.697, 0.014878272926865700416),
    (15.0, 562.341, 0.013773716391274866),
    (15.0, 600.0, 0.013503024607809831747),
    (15.0, 749.894, 0.012539720687241606453),
    (15.0, 1000.0, 0.011274121576474045823),
    (15.0, 1333.52, 0.010041513921115941992),
    (15.0, 1778.28, 0.0088809214204911916515),
    (15.0, 2371.37, 0.0078131415190651227767),
    (15.0, 3162.28, 0.0068465908363709766061),
    (15.0, 4000.0, 0.0061330654357542591945),
    (15.0, 4001.0, 0.006132342016109568794),
    (15.0, 4216.97, 0.0059818462812737006488),
    (15.0, 5623.41, 0.0052147168613125929584),
    (15.0, 7498.94, 0.0045383877239045487959),
    (15.0, 9999.0, 0.0039450332335760942129),
    (15.0, 10000.0, 0.0039448404108790851693),
    (20.0, 0.001, 3.9159864511930746007e-85),
    (20.0, 0.00133352, 1.2379041254136509492e-82),
    (20.0, 0.00177828, 3.9129659668517914903e-80),
    (20.0, 0.00237137, 1.2366080031637167187e-77),
    (20.0, 0.00316228, 3.9075863841437051342e-75),
    (20.0, 0.00421697, 1.2343956514010441441e-72),
    (20.0, 0.00562341, 3.8978793692334481506e-70),
    (20.0, 0.00749894, 1.23031576120877155e-67),
    (20.0, 0.01, 3.8809052697811127705e-65),
    (20.0, 0.0133352, 1.2231385581674374024e-62),
    (20.0, 0.0177828, 3.8508536565903800871e-60),
    (20.0, 0.0237137, 1.2105035712317123511e-57),
    (20.0, 0.0316228, 3.7979868728965671636e-55),
    (20.0, 0.0421697, 1.1884497509619287248e-52),
    (20.0, 0.0562341, 3.7056520434414057883e-50),
    (20.0, 0.0749894, 1.1500974393682814302e-47),
    (20.0, 0.1, 3.5472984018130244578e-45),
    (20.0, 0.133352, 1.0850357387901278386e-42),
    (20.0, 0.177828, 3.2825558671410606486e-40),
    (20.0, 0.237137, 9.785101636473134476e-38),
    (20.0, 0.316228, 2.8606374855297064041e-35),
    (20.0, 0.421697, 8.1482505922068290022e-33),
    (20.0, 0.562341, 2.2422480967206587869e-30),
    (20.0, 0.749894, 5.8952900417162113919e-28),
    (20.0, 1.0, 1.4593174056818685961e-25),
    (20.0, 1.33352, 3.336685984966216858e-23),
    (20.0, 1.77828, 6.8756970594042462034e-21),
    (20.0, 2.37137, 1.2371400074418069984e-18),
    (20.0, 3.16228, 1.8684608970812113063e-16),
    (20.0, 4.21697, 2.2562239510043460618e-14),
    (20.0, 5.62341, 2.0567444393800653533e-12),
    (20.0, 7.49894, 1.3274077497941671846e-10),
    (20.0, 10.0, 5.6786220145215239128e-9),
    (20.0, 13.3352, 1.5194768751407373153e-7),
    (20.0, 17.7828, 2.4497610793475866058e-6),
    (20.0, 23.7137, 0.000023674581695858679379),
    (20.0, 25.0, 0.000034023247929509175414),
    (20.0, 31.6228, 0.00014144972132884281659),
    (20.0, 34.9, 0.00023599291804562161521),
    (20.0, 35.0, 0.00023935350362770118332),
    (20.0, 35.1, 0.00024274264980239501077),
    (20.0, 42.1697, 0.00055421722254219360539),
    (20.0, 49.9, 0.0010424574519072884217),
    (20.0, 50.1, 0.0010568163500471170322),
    (20.0, 56.2341, 0.001530460252662694493),
    (20.0, 74.9894, 0.0031990116613299836888),
    (20.0, 100.0, 0.0053879576269663273678),
    (20.0, 133.352, 0.0076956715945350517301),
    (20.0, 177.828, 0.0097031490021871297868),
    (20.0, 224.0, 0.010905779866658545618),
    (20.0, 226.0, 0.01094370511296805479),
    (20.0, 237.137, 0.011137863365211764542),
    (20.0, 316.228, 0.011914247984371859237),
    (20.0, 421.697, 0.01208810003273409547),
    (20.0, 562.341, 0.011787619249006723833),
    (20.0, 600.0, 0.011669514234361537046),
    (20.0, 749.894, 0.011157936501710556973),
    (20.0, 1000.0, 0.010329157758475194371),
    (20.0, 1333.52, 0.009403569784997947629),
    (20.0, 1778.28, 0.0084544035340056441158),
    (20.0, 2371.37, 0.0075300462436102724628),
    (20.0, 3162.28, 0.0066597150541036499875),
    (20.0, 4000.0, 0.0060003453876786894755),
    (20.0, 4001.0, 0.0059996704331852098024),
    (20.0, 4216.97, 0.0058589907831615209585),
    (20.0, 5623.41, 0.0051341971464983382847),
    (20.0, 7498.94, 0.0044857366925466036479),
    (20.0, 9999.0, 0.0039106596582889489006),
    (20.0, 10000.0, 0.0039104719380211453191),
    (30.0, 0.001, 3.5075652933916733656e-132),
    (30.0, 0.00133352, 1.9717276577758899816e-128),
    (30.0, 0.00177828, 1.1083376630128034623e-124),
    (30.0, 0.00237137, 6.228591406414202695e-121),
    (30.0, 0.00316228, 3.5000670951351894293e-117),
    (30.0, 0.00421697, 1.9661835252860093927e-113),
    (30.0, 0.00562341, 1.1040542545509504948e-109),
    (30.0, 0.00749894, 6.1969767514409402352e-106),
    (30.0, 0.01, 3.4761416122389713493e-102),
    (30.0, 0.0133352, 1.9482078170991102154e-98),
    (30.0, 0.0177828, 1.0907431976804224524e-94),
    (30.0, 0.0237137, 6.0970946351181522847e-91),
    (30.0, 0.0316228, 3.4018847022487289563e-87),
    (30.0, 0.0421697, 1.8929866777007179885e-83),
    (30.0, 0.0562341, 1.0495942358562865425e-79),
    (30.0, 0.0749894, 5.792801285110754721e-76),
    (30.0, 0.1, 3.1772078775728791229e-72),
    (30.0, 0.133352, 1.7281216318841581866e-68),
    (30.0, 0.177828, 9.2966271370941951051e-65),
    (30.0, 0.237137, 4.9275308944851266362e-61),
    (30.0, 0.316228, 2.5613200761917793045e-57),
    (30.0, 0.421697, 1.2969926794317546843e-53),
    (30.0, 0.562341, 6.3433464320491459126e-50),
    (30.0, 0.749894, 2.9629954285786600744e-46),
    (30.0, 1.0, 1.3021094983785914437e-42),
    (30.0, 1.33352, 5.2785237260645068932e-39),
    (30.0, 1.77828, 1.9240584746656987314e-35),
    (30.0, 2.37137, 6.0985712082199587607e-32),
    (30.0, 3.16228, 1.6109006318675229551e-28),
    (30.0, 4.21697, 3.3588607170100378519e-25),
    (30.0, 5.62341, 5.1705225375274387093e-22),
    (30.0, 7.49894, 5.4233846311108994519e-19),
    (30.0, 10.0, 3.535551211760517793e-16),
    (30.0, 13.3352, 1.2990769093115359958e-13),
    (30.0, 17.7828, 2.4540469524531936256e-11),
    (30.0, 23.7137, 2.2244932141438008306e-9),
    (30.0, 25.0, 4.6831156172432601168e-9),
    (30.0, 31.6228, 9.4178581387412088324e-8),
    (30.0, 34.9, 2.8610778972795830137e-7),
    (30.0, 35.0, 2.9510691943795043418e-7),
    (30.0, 35.1, 3.0434069204650912835e-7),
    (30.0, 42.1697, 1.9100461797968875033e-6),
    (30.0, 49.9, 8.1152032663983775848e-6),
    (30.0, 50.1, 8.3771604948379714581e-6),
    (30.0, 56.2341, 0.00001995627770581053509),
    (30.0, 74.9894, 0.00011881575879776847324),
    (30.0, 100.0, 0.00044869877569209861457),
    (30.0, 133.352, 0.0011856778070315742588),
    (30.0, 177.828, 0.0023808827959973514534),
    (30.0, 224.0, 0.0035720705798896195972),
    (30.0, 226.0, 0.0036199998457621566516),
    (30.0, 237.137, 0.0038803295915643173347),
    (30.0, 316.228, 0.0054020247414423001737),
    (30.0, 421.697, 0.0066794600283813737116),
    (30.0, 562.341, 0.0075552038262175592611),
    (30.0, 600.0, 0.0076913106954898193495),
    (30.0, 749.894, 0.0079933698390961233601),
    (30.0, 1000.0, 0.008043568009937533559),
    (30.0, 1333.52, 0.0077955785673246389708),
    (30.0, 1778.28, 0.0073453497105397719514),
    (30.0, 2371.37, 0.006776472505621497208),
    (30.0, 3162.28, 0.0061534208867954690019),
    (30.0, 4000.0, 0.0056367611763883543615),
    (30.0, 4001.0, 0.0056362151833975609712),
    (30.0, 4216.97, 0.0055217035398948056226),
    (30.0, 5623.41, 0.0049109267413791266527),
    (30.0, 7498.94, 0.0043386469419159791847),
    (30.0, 9999.0, 0.0038140909253671045932),
    (30.0, 10000.0, 0.0038139173772688166724),
    (50.0, 0.001, 2.9173669051593547881e-230),
    (50.0, 0.00133352, 5.1858850588964225461e-224),
    (50.0, 0.00177828, 9.2184999557086779427e-218),
    (50.0, 0.00237137, 1.6381797399848494517e-211),
    (50.0, 0.00316228, 2.9111733842714467693e-205),
    (50.0, 0.00421697, 5.171535921996713536e-199),
    (50.0, 0.00562341, 9.1827051262896281739e-193),
    (50.0, 0.00749894, 1.6299063589873737674e-186),
    (50.0, 0.01, 2.8912298058050727227e-180),
    (50.0, 0.0133352, 5.1240221464528235224e-174),
    (50.0, 0.0177828, 9.072150572626911013e-168),
    (50.0, 0.0237137, 1.603591994842164434e-161),
    (50.0, 0.0316228, 2.8295015281945416463e-155),
    (50.0, 0.0421697, 4.9789828732803749537e-149),
    (50.0, 0.0562341, 8.7296606170763334579e-143),
    (50.0, 0.0749894, 1.5235747680876757279e-136),
    (50.0, 0.1, 2.6425133197552332721e-130),
    (50.0, 0.133352, 4.5449158141693231539e-124),
    (50.0, 0.177828, 7.7316137680935027359e-118),
    (50.0, 0.237137, 1.2957578147542235008e-111),
    (50.0, 0.316228, 2.1296989894321070955e-105),
    (50.0, 0.421697, 3.4094851964897297138e-99),
    (50.0, 0.562341, 5.2706526821393127563e-93),
    (50.0, 0.749894, 7.779319158159900336e-87),
    (50.0, 1.0, 1.0795919973373182479e-80),
    (50.0, 1.33352, 1.3805339452034132967e-74),
    (50.0, 1.77828, 1.584406130399291904e-68),
    (50.0, 2.37137, 1.5757486772224230554e-62),
    (50.0, 3.16228, 1.2982538281807138701e-56),
    (50.0, 4.21697, 8.3535337781754992712e-51),
    (50.0, 5.62341, 3.8942011278050413301e-45),
    (50.0, 7.49894, 1.1969399295541595323e-39),
    (50.0, 10.0, 2.1596267894454476333e-34),
    (50.0, 13.3352, 1.9928232060972421201e-29),
    (50.0, 17.7828, 8.0540379975132747547e-25),
    (50.0, 23.7137, 1.2136768221050415093e-20),
    (50.0, 25.0, 6.2973842451560716188e-20),
    (50.0, 31.6228, 5.9019699016748043747e-17),
    (50.0, 34.9, 8.1766949765764146539e-16),
    (50.0, 35.0, 8.8054419947599354814e-16),
    (50.0, 35.1, 9.4793617939745624768e-16),
    (50.0, 42.1697, 8.389762081129229052e-14),
    (50.0, 49.9, 3.2676573614305479173e-12),
    (50.0, 50.1, 3.5463596945070281918e-12),
    (50.0, 56.2341, 3.4036947239953042493e-11),
    (50.0, 74.9894, 4.1944393637958695857e-9),
    (50.0, 100.0, 1.7938050431597961324e-7),
    (50.0, 133.352, 3.1571095648923230992e-6),
    (50.0, 177.828, 0.000027213708738594427257),
    (50.0, 224.0, 0.00010165346159784331069),
    (50.0, 226.0, 0.00010628448821379477656),
    (50.0, 237.137, 0.00013427867960101839952),
    (50.0, 316.228, 0.00043176094950308089842),
    (50.0, 421.697, 0.0010027191436459106296),
    (50.0, 562.341, 0.001821432002460432413),
    (50.0, 600.0, 0.0020272840600119784311),
    (50.0, 749.894, 0.0027500566797653476975),
    (50.0, 1000.0, 0.0036135818925941225465),
    (50.0, 1333.52, 0.0042781101010691960663),
    (50.0, 1778.28, 0.0046837932574290771278),
    (50.0, 2371.37, 0.0048357914630529406611),
    (50.0, 3162.28, 0.004777862657296751654),
    (50.0, 4000.0, 0.0046148906741072136913),
    (50.0, 4001.0, 0.0046146743781535229156),
    (50.0, 4216.97, 0.004567460116388394539),
    (50.0, 5623.41, 0.0042596579275118332801),
    (50.0, 7498.94, 0.0038996008985132985955),
    (50.0, 9999.0, 0.0035208082212305150983),
    (50.0, 10000.0, 0.0035206761887220451646),
    (75.5, 0.01, 8.5819958314312422417e-285),
    (75.5, 0.0133352, 2.3420962355445867413e-275),
    (75.5, 0.0177828, 6.3858609424266122367e-266),
    (75.5, 0.0237137, 1.7381287074987684797e-256),
    (75.5, 0.0316228, 4.7230568736347709633e-247),
    (75.5, 0.0421697, 1.2798473369623716901e-237),
    (75.5, 0.0562341, 3.4553692938442878535e-228),
    (75.5, 0.0749894, 9.2867220529314342985e-219),
    (75.5, 0.1, 2.4803664398667364965e-209),
    (75.5, 0.133352, 6.5691183778770441287e-200),
    (75.5, 0.177828, 1.7209059738950987339e-190),
    (75.5, 0.237137, 4.4409142114003840364e-181),
    (75.5, 0.316228, 1.1239868087231870207e-171),
    (75.5, 0.421697, 2.7706484054191772486e-162),
    (75.5, 0.562341, 6.5938544186119427809e-153),
    (75.5, 0.749894, 1.4981152439502876742e-143),
    (75.5, 1.0, 3.1993065365621385616e-134),
    (75.5, 1.33352, 6.2918629771530488475e-125),
    (75.5, 1.77828, 1.1095135143995831011e-115),
    (75.5, 2.37137, 1.6923379346971079942e-106),
    (75.5, 3.16228, 2.1319856133631181524e-97),
    (75.5, 4.21697, 2.085892775868076607e-88),
    (75.5, 5.62341, 1.4640210554066207552e-79),
    (75.5, 7.49894, 6.6587135897466557029e-71),
    (75.5, 10.0, 1.7243086205486669734e-62),
    (75.5, 13.3352, 2.164906523337759073e-54),
    (75.5, 17.7828, 1.086024637917081285e-46),
    (75.5, 23.7137, 1.7401199397343217132e-39),
    (75.5, 25.0, 3.1679423633897519245e-38),
    (75.5, 31.6228, 7.0021726048676823559e-33),
    (75.5, 34.9, 8.9413716723004500371e-31),
    (75.5, 35.0, 1.0262382476113408066e-30),
    (75.5, 35.1, 1.1771971429922241788e-30),
    (75.5, 42.1697, 5.6086927659911135263e-27),
    (75.5, 49.9, 6.970866793253087847e-24),
    (75.5, 50.1, 8.1936160713850212651e-24),
    (75.5, 56.2341, 7.4496032850404129483e-22),
    (75.5, 74.9894, 1.5041432869926518428e-17),
    (75.5, 100.0, 4.8002850548558237902e-14),
    (75.5, 133.352, 2.8398706112207399879e-11),
    (75.5, 177.828, 3.9520486941935750026e-9),
    (75.5, 224.0, 8.6905265784376647093e-8),
    (75.5, 226.0, 9.6584540612610583984e-8),
    (75.5, 237.137, 1.6833754293374214978e-7),
    (75.5, 316.228, 2.8124341574198733964e-6),
    (75.5, 421.697, 0.000022782595480722948229),
    (75.5, 562.341, 0.00010622043148458115943),
    (75.5, 600.0, 0.00014123302755950839056),
    (75.5, 749.894, 0.00032595027892905323823),
    (75.5, 1000.0, 0.00072969267788086423613),
    (75.5, 1333.52, 0.0012886523120265634246),
    (75.5, 1778.28, 0.0019045270143977076193),
    (75.5, 2371.37, 0.0024625967246776271451),
    (75.5, 3162.28, 0.0028804435550577717497),
    (75.5, 4000.0, 0.00309325522387132654),
    (75.5, 4001.0, 0.0030934195566906244837),
    (75.5, 4216.97, 0.0031251362330397009393),
    (75.5, 5623.41, 0.0032047132168605337396),
    (75.5, 7498.94, 0.003150251909718375736),
    (75.5, 9999.0, 0.0030001286158604513574),
    (75.5, 10000.0, 0.0030000641221726384345),
    (120.0, 0.421697, 7.3805194197942935315e-281),
    (120.0, 0.562341, 6.4126670781822223102e-266),
    (120.0, 0.749894, 5.318900751052958754e-251),
    (120.0, 1.0, 4.1458108734010054789e-236),
    (120.0, 1.33352, 2.9744450665146236412e-221),
    (120.0, 1.77828, 1.9123360741461607587e-206),
    (120.0, 2.37137, 1.0619351014046930424e-191),
    (120.0, 3.16228, 4.8602293099465103955e-177),
    (120.0, 4.21697, 1.720344504629309513e-162),
    (120.0, 5.62341, 4.3363884508592478033e-148),
    (120.0, 7.49894, 6.9932470997666840859e-134),
    (120.0, 10.0, 6.2764822907014492947e-120),
    (120.0, 13.3352, 2.6234497357806040824e-106),
    (120.0, 17.7828, 4.083661825044797115e-93),
    (120.0, 23.7137, 1.7964370093673285171e-80),
    (120.0, 25.0, 3.1939828091218533199e-78),
    (120.0, 31.6228, 1.611790556181121129e-68),
    (120.0, 34.9, 1.3035516897496414915e-64),
    (120.0, 35.0, 1.6863990902084562146e-64),
    (120.0, 35.1, 2.1796357831288506587e-64),
    (120.0, 42.1697, 2.0395683118665953723e-57),
    (120.0, 49.9, 2.1948282596013358908e-51),
    (120.0, 50.1, 3.0216723189863468751e-51),
    (120.0, 56.2341, 2.4846069615143413466e-47),
    (120.0, 74.9894, 2.0652876720871773461e-38),
    (120.0, 100.0, 9.2427848291132351467e-31),
    (120.0, 133.352, 2.0942957513544992805e-24),
    (120.0, 177.828, 2.7692534329387712613e-19),
    (120.0, 224.0, 5.5893566778236671949e-16),
    (120.0, 226.0, 7.2723218972563985463e-16),
    (120.0, 237.137, 2.9147304609147792947e-15),
    (120.0, 316.228, 3.6482560107603759036e-12),
    (120.0, 421.697, 8.2005031816533971302e-10),
    (120.0, 562.341, 4.8021982041859784587e-8),
    (120.0, 600.0, 1.0310800273958466928e-7),
    (120.0, 749.894, 9.9941895651852747535e-7),
    (120.0, 1000.0, 9.4673042265959765765e-6),
    (120.0, 1333.52, 0.000049464228950978096438),
    (120.0, 1778.28, 0.0001650887171732230274),
    (120.0, 2371.37, 0.00039338995590842517035),
    (120.0, 3162.28, 0.00072789898715802459635),
    (120.0, 4000.0, 0.0010426162544133492145),
    (120.0, 4001.0, 0.0010429550623390466579),
    (120.0, 4216.97, 0.0011139764925959151316),
    (120.0, 5623.41, 0.0014785546784389799483),
    (120.0, 7498.94, 0.0017636679565129492354),
    (120.0, 9999.0, 0.0019417889564710767073),
    (120.0, 10000.0, 0.0019418316919476159662),
    (200.0, 5.62341, 2.9643260629275203956e-288),
    (200.0, 7.49894, 4.6850074158767085263e-264),
    (200.0, 10.0, 4.056649805112030871e-240),
    (200.0, 13.3352, 1.5908135535063193881e-216),
    (200.0, 17.7828, 2.2121738801868026749e-193),
    (200.0, 23.7137, 7.9704232790860861616e-171),
    (200.0, 25.0, 9.2195588588768963784e-167),
    (200.0, 31.6228, 5.0360200617188463086e-149),
    (200.0, 34.9, 9.1370586271923193598e-142),
    (200.0, 35.0, 1.4779108235056171108e-141),
    (200.0, 35.1, 2.386665512782069668e-141),
    (200.0, 42.1697, 3.4556765707451918038e-128),
    (200.0, 49.9, 1.5164976514676129664e-116),
    (200.0, 50.1, 2.8317887227058413242e-116),
    (200.0, 56.2341, 1.4683999909465919966e-108),
    (200.0, 74.9894, 2.0742943480348243521e-90),
    (200.0, 100.0, 5.1910158169874353277e-74),
    (200.0, 133.352, 1.3384089019979266787e-59),
    (200.0, 177.828, 2.5458209315277160479e-47),
    (200.0, 224.0, 5.0185828409265907571e-39),
    (200.0, 226.0, 9.8412938659793053239e-39),
    (200.0, 237.137, 3.4832395531335453712e-37),
    (200.0, 316.228, 4.6683083086422413584e-29),
    (200.0, 421.697, 1.0749031050100056414e-22),
    (200.0, 562.341, 8.3959052293460183058e-18),
    (200.0, 600.0, 7.141121591529767755e-17),
    (200.0, 749.894, 4.3694472371419748075e-14),
    (200.0, 1000.0, 2.7505752805628150294e-11),
    (200.0, 1333.52, 3.4249672851253409688e-9),
    (200.0, 1778.28, 1.2452917327725519202e-7),
    (200.0, 2371.37, 1.7865489982463884602e-6),
    (200.0, 3162.28, 0.000012725959297250640562),
    (200.0, 4000.0, 0.000042520867527441516977),
    (200.0, 4001.0, 0.000042568697525545091097),
    (200.0, 4216.97, 0.00005355720491229004197),
    (200.0, 5623.41, 0.00015182754157479142193),
    (200.0, 7498.94, 0.00031998268195999450957),
    (200.0, 9999.0, 0.00053981743063732412193),
    (200.0, 10000.0, 0.00053989841809842857601),
];
