"""Hand-curated seed lexicon for the shipped datasets.

HETEROGRAPHIC holds (pun_word, alt_word, pun_gloss, alt_gloss) homophone or
near-homophone pairs; HOMOGRAPHIC holds (word, gloss_a, gloss_b) polysemes.
TOPICS maps a topic name to tagged context vocabulary. build_data.py consumes
all of it; nothing here is imported by the package itself.
"""

HETEROGRAPHIC = [
    ("stair", "stare",
     "support consisting of a place to rest the foot while ascending or descending a stairway",
     "look at with fixed eyes"),
    ("punctually", "puncture",
     "at the expected or proper time",
     "a small hole made by a sharp object"),
    ("hedges", "edges",
     "a fence formed by a row of closely planted shrubs",
     "the boundary lines of a surface"),
    ("husky", "husk",
     "a breed of sled dog with a thick double coat",
     "the outer membranous covering of a seed or fruit"),
    ("boar", "bore",
     "an uncastrated male hog",
     "a dull and uninteresting person"),
    ("dyed", "die",
     "colored with a staining substance",
     "pass from physical life"),
    ("dye", "die",
     "a substance used to color cloth or hair",
     "pass from physical life"),
    ("relatively", "relativity",
     "to a degree measured by comparison with something else",
     "the theory that space and time are aspects of a single continuum"),
    ("father", "feather",
     "a male parent",
     "one of the light horny structures forming the plumage of birds"),
    ("allow", "aloud",
     "let have or permit",
     "using the voice loudly enough to be heard"),
    ("census", "sense",
     "an official count of a population",
     "a general conscious awareness or meaning"),
    ("throng", "wrong",
     "a large gathered crowd of people",
     "contrary to what is correct or true"),
    ("guess", "guest",
     "an estimate made without complete knowledge",
     "a visitor to whom hospitality is extended"),
    ("limelight", "lime",
     "a focus of public attention",
     "a green citrus fruit with acid juice"),
    ("mist", "miss",
     "a thin fog of fine water droplets",
     "fail to reach or hit"),
    ("constellation", "consolation",
     "a configuration of stars seen as a pattern",
     "comfort received after a loss or disappointment"),
    ("seriously", "sirius",
     "in an earnest and grave manner",
     "the brightest star in the night sky"),
    ("serious", "sirius",
     "concerned with grave and important matters",
     "the brightest star in the night sky"),
    ("fluently", "flue",
     "smoothly and without hesitation",
     "a pipe that carries smoke from a fireplace"),
    ("assay", "say",
     "analyze a substance to determine its composition",
     "express something in words"),
    ("yammered", "yam",
     "talked loudly and persistently",
     "an edible starchy tropical tuber"),
    ("hare", "hair",
     "a swift long-eared mammal resembling a large rabbit",
     "the fine filaments growing from the skin of mammals"),
    ("ate", "eight",
     "took in food by mouth",
     "the cardinal number after seven"),
    ("bail", "bale",
     "money deposited to obtain release from custody",
     "a large bound bundle of raw material"),
    ("band", "banned",
     "a group of musicians who play together",
     "officially forbidden"),
    ("bare", "bear",
     "lacking any covering or clothing",
     "a massive shaggy-coated wild animal"),
    ("baron", "barren",
     "a nobleman of the lowest rank",
     "incapable of producing offspring or vegetation"),
    ("base", "bass",
     "the bottom support on which something rests",
     "the lowest adult male singing voice"),
    ("beach", "beech",
     "a sandy shore beside a body of water",
     "a tree with smooth gray bark and small edible nuts"),
    ("bean", "been",
     "an edible seed that grows in a long pod",
     "existed or stayed somewhere in the past"),
    ("beat", "beet",
     "strike repeatedly",
     "a plant with a dark red edible root"),
    ("berry", "bury",
     "a small juicy fruit without a stone",
     "place a dead body in the ground"),
    ("billed", "build",
     "charged an amount owed for goods or services",
     "construct by assembling parts"),
    ("blew", "blue",
     "moved with force as a current of air",
     "the color of the clear daytime sky"),
    ("board", "bored",
     "a flat piece of sawed lumber",
     "tired and restless from dull repetition"),
    ("brake", "break",
     "a device that slows or stops a vehicle",
     "destroy the integrity of something"),
    ("bread", "bred",
     "a baked food made from flour and water",
     "raised or produced by deliberate mating"),
    ("brews", "bruise",
     "makes beer or tea by soaking and boiling",
     "an injury that discolors the skin without breaking it"),
    ("bridal", "bridle",
     "of or relating to a wedding",
     "headgear used to control a horse"),
    ("buy", "by",
     "obtain something in exchange for money",
     "close to or beside something"),
    ("cell", "sell",
     "the smallest structural unit of a living organism",
     "exchange goods for money"),
    ("cent", "scent",
     "a coin worth one hundredth of a dollar",
     "a distinctive pleasant smell"),
    ("cereal", "serial",
     "a breakfast food made from processed grain",
     "arranged in a sequence of installments"),
    ("chews", "choose",
     "grinds food with the teeth",
     "pick out from a number of alternatives"),
    ("chord", "cord",
     "a combination of musical notes sounded together",
     "a length of twisted strands or thin rope"),
    ("cite", "site",
     "refer to a source as an authority",
     "the place where something is located"),
    ("coarse", "course",
     "rough and loose in texture",
     "a connected series of lessons on a subject"),
    ("colonel", "kernel",
     "a senior army officer above a major",
     "the inner edible part of a seed or nut"),
    ("creak", "creek",
     "make a harsh high squeaking sound",
     "a small natural stream of water"),
    ("currant", "current",
     "a small dried seedless grape used in baking",
     "a steady flow of water or electricity"),
    ("days", "daze",
     "periods of twenty-four hours",
     "a state of stunned confusion"),
    ("dear", "deer",
     "regarded with deep affection",
     "a hoofed grazing animal the males of which bear antlers"),
    ("dew", "due",
     "moisture condensed overnight on cool surfaces",
     "owed as a debt at a particular time"),
    ("doe", "dough",
     "a female deer",
     "a thick mixture of flour and liquid for baking"),
    ("dual", "duel",
     "consisting of two parts or elements",
     "a prearranged formal fight between two persons"),
    ("earn", "urn",
     "acquire through labor or service",
     "a vase used to hold the ashes of the dead"),
    ("ewe", "you",
     "a female sheep",
     "the person or people being addressed"),
    ("fair", "fare",
     "free from favoritism or bias",
     "the money charged for a journey"),
    ("feat", "feet",
     "a notable achievement requiring skill",
     "the parts of the legs below the ankles"),
    ("fir", "fur",
     "an evergreen tree with flat needles and upright cones",
     "the thick hairy coat of a mammal"),
    ("flea", "flee",
     "a small wingless jumping insect that feeds on blood",
     "run away from danger"),
    ("flour", "flower",
     "fine powder ground from grain for baking",
     "the colorful blossom of a plant"),
    ("foul", "fowl",
     "highly offensive or against the rules",
     "a bird kept for its meat or eggs"),
    ("genes", "jeans",
     "the units of heredity carried on chromosomes",
     "casual trousers made of denim"),
    ("gilt", "guilt",
     "covered with a thin layer of gold",
     "remorse for having done something wrong"),
    ("grate", "great",
     "shred by rubbing against a rough surface",
     "remarkably large or outstanding"),
    ("groan", "grown",
     "a low deep sound of pain or disapproval",
     "developed to full maturity"),
    ("hail", "hale",
     "pellets of frozen rain falling in a storm",
     "in sturdy and vigorous good health"),
    ("hall", "haul",
     "a large interior passage or assembly room",
     "drag or pull something with effort"),
    ("heal", "heel",
     "restore to health after injury",
     "the rounded back part of the foot"),
    ("heard", "herd",
     "perceived sound by the ear",
     "a group of animals kept or moving together"),
    ("higher", "hire",
     "at a greater elevation or level",
     "engage a person for pay"),
    ("hoarse", "horse",
     "rough and husky in voice",
     "a large hoofed animal used for riding and pulling"),
    ("hole", "whole",
     "an opening into or through something",
     "including every part with nothing missing"),
    ("hour", "our",
     "a period of sixty minutes",
     "belonging to us"),
    ("idle", "idol",
     "not in use or engaged in work",
     "an image worshipped as a god"),
    ("knead", "need",
     "work dough by pressing and folding",
     "require something essential"),
    ("knight", "night",
     "a medieval mounted soldier serving a lord",
     "the time of darkness between sunset and sunrise"),
    ("knot", "not",
     "a fastening made by looping and tying rope",
     "a word expressing negation or refusal"),
    ("know", "no",
     "be directly aware of a fact",
     "a word used to refuse or deny"),
    ("lain", "lane",
     "rested in a horizontal position",
     "a narrow road or marked strip of roadway"),
    ("leak", "leek",
     "an accidental escape of fluid through a hole",
     "a mild vegetable related to the onion with a long white stalk"),
    ("lessen", "lesson",
     "make or become smaller in degree",
     "a single unit of instruction"),
    ("loan", "lone",
     "money lent that must be repaid with interest",
     "being the only one of its kind"),
    ("made", "maid",
     "produced or brought into being",
     "a woman employed to do housework"),
    ("mail", "male",
     "letters and parcels carried by the postal system",
     "of the sex that fathers offspring"),
    ("main", "mane",
     "most important or principal",
     "the long heavy hair on a horse's neck"),
    ("maize", "maze",
     "corn cultivated as a grain crop",
     "a confusing network of winding paths"),
    ("manner", "manor",
     "a way in which something is done",
     "the principal house of a landed estate"),
    ("meat", "meet",
     "animal flesh used as food",
     "come into the presence of someone"),
    ("medal", "meddle",
     "a coin-shaped award for distinction",
     "interfere in the affairs of others"),
    ("might", "mite",
     "physical strength or great power",
     "a minute arachnid that infests plants and animals"),
    ("moose", "mousse",
     "a large northern deer with broad flat antlers",
     "a light airy whipped dessert"),
    ("morning", "mourning",
     "the early part of the day before noon",
     "the expression of sorrow for a death"),
    ("muscle", "mussel",
     "body tissue that contracts to produce movement",
     "an edible marine bivalve with a dark shell"),
    ("naval", "navel",
     "of or relating to a navy or warships",
     "the small depression on the abdomen left by the cord"),
    ("none", "nun",
     "not any amount or part",
     "a woman living under religious vows"),
    ("oar", "ore",
     "a long pole with a flat blade for rowing",
     "rock from which valuable metal is extracted"),
    ("overdue", "overdo",
     "past the time when something was expected",
     "carry something to excess"),
    ("pail", "pale",
     "an open container with a handle for carrying liquid",
     "unusually light in color"),
    ("pain", "pane",
     "a feeling of physical suffering",
     "a single sheet of glass in a window"),
    ("pair", "pear",
     "two matched or associated items",
     "a sweet juicy fruit narrow at the stem end"),
    ("passed", "past",
     "went by or moved beyond",
     "the time that has already happened"),
    ("patience", "patients",
     "calm endurance of delay or trouble",
     "people receiving medical treatment"),
    ("pause", "paws",
     "a short temporary stop in action",
     "the clawed feet of an animal"),
    ("peace", "piece",
     "freedom from war and disturbance",
     "a portion separated from a whole"),
    ("peak", "peek",
     "the pointed summit of a mountain",
     "a quick furtive look"),
    ("peal", "peel",
     "the loud prolonged ringing of bells",
     "the outer skin of a fruit"),
    ("pedal", "peddle",
     "a lever operated by the foot",
     "travel about selling small goods"),
    ("plain", "plane",
     "simple and without decoration",
     "a powered aircraft with fixed wings"),
    ("pole", "poll",
     "a long slender rounded rod",
     "a survey of public opinion"),
    ("pore", "pour",
     "a tiny opening in skin or rock",
     "cause liquid to flow in a steady stream"),
    ("pray", "prey",
     "address a god in worship or request",
     "an animal hunted by another for food"),
    ("principal", "principle",
     "the head of a school",
     "a fundamental rule or truth"),
    ("profit", "prophet",
     "financial gain from business activity",
     "a person regarded as speaking for a god"),
    ("rain", "reign",
     "water falling in drops from the clouds",
     "the period during which a sovereign rules"),
    ("raise", "rays",
     "lift or move to a higher position",
     "narrow beams of light or radiation"),
    ("read", "reed",
     "interpret written or printed words",
     "a tall slender grass growing in wet ground"),
    ("real", "reel",
     "actually existing and not imagined",
     "a revolving spool for winding thread or film"),
    ("right", "write",
     "correct and morally good",
     "mark letters or words on a surface"),
    ("ring", "wring",
     "a circular metal band worn on the finger",
     "twist and squeeze to force liquid out"),
    ("road", "rode",
     "an open paved way for vehicles",
     "traveled on an animal or in a vehicle"),
    ("role", "roll",
     "an actor's part in a play or film",
     "move along by turning over and over"),
    ("root", "route",
     "the underground anchoring part of a plant",
     "a chosen way of travel between places"),
    ("rose", "rows",
     "a fragrant flower borne on a thorny shrub",
     "lines of things arranged side by side"),
    ("sail", "sale",
     "a sheet of fabric that catches the wind to drive a boat",
     "the exchange of goods for an agreed price"),
    ("scene", "seen",
     "a division of an act in a play or film",
     "perceived with the eyes"),
    ("sea", "see",
     "the great expanse of salt water covering the earth",
     "perceive with the eyes"),
    ("seam", "seem",
     "the line where two pieces of fabric are sewn together",
     "give the impression of being"),
    ("sew", "sow",
     "join or repair fabric with stitches",
     "scatter seed over prepared ground"),
    ("shear", "sheer",
     "cut the wool or hair off an animal",
     "complete and utter in degree"),
    ("soar", "sore",
     "fly or rise high on currents of air",
     "painful or tender to the touch"),
    ("sole", "soul",
     "the underside of the foot or a shoe",
     "the immaterial spiritual part of a person"),
    ("some", "sum",
     "an unspecified amount or number",
     "the total resulting from adding numbers"),
    ("son", "sun",
     "a male child in relation to his parents",
     "the star at the center of the solar system"),
    ("stake", "steak",
     "a pointed post driven into the ground",
     "a thick slice of meat cut for grilling"),
    ("stationary", "stationery",
     "standing still and not moving",
     "paper and envelopes used for writing"),
    ("steal", "steel",
     "take another's property without permission",
     "a hard strong alloy of iron and carbon"),
    ("straight", "strait",
     "extending without a bend or curve",
     "a narrow channel of sea joining two larger bodies"),
    ("suite", "sweet",
     "a set of connected rooms in a hotel",
     "having the pleasant taste of sugar"),
    ("tail", "tale",
     "the rear appendage extending from an animal's body",
     "a narrative of real or imaginary events"),
    ("taught", "taut",
     "passed on knowledge or skill",
     "stretched or pulled tight"),
    ("tea", "tee",
     "a drink made by steeping dried leaves in hot water",
     "the small peg from which a golf ball is struck"),
    ("team", "teem",
     "a group organized to work or play together",
     "be full of things in great numbers"),
    ("tide", "tied",
     "the periodic rise and fall of the sea",
     "fastened or bound with a knot"),
    ("toad", "towed",
     "a tailless amphibian with dry warty skin",
     "pulled along behind a vehicle"),
    ("toe", "tow",
     "one of the digits of the foot",
     "pull something along with a rope or chain"),
    ("vain", "vein",
     "excessively proud of one's appearance",
     "a vessel carrying blood back to the heart"),
    ("waist", "waste",
     "the narrow part of the body above the hips",
     "use carelessly or to no purpose"),
    ("wait", "weight",
     "stay in place until an expected event happens",
     "the heaviness of a person or thing"),
    ("war", "wore",
     "armed conflict between nations or groups",
     "had clothing on the body"),
    ("weak", "week",
     "lacking physical strength",
     "a period of seven days"),
    ("weather", "whether",
     "the state of the atmosphere at a place and time",
     "a word introducing a choice between alternatives"),
    ("which", "witch",
     "a word asking for one out of a known set",
     "a woman believed to practice magic"),
    ("whine", "wine",
     "complain in an annoying high-pitched voice",
     "an alcoholic drink made from fermented grapes"),
    ("wood", "would",
     "the hard fibrous substance of tree trunks",
     "a word expressing a conditional wish or intent"),
    ("yoke", "yolk",
     "a wooden frame joining two draft animals at the neck",
     "the yellow central part of an egg"),
    ("ant", "aunt",
     "a small social insect living in organized colonies",
     "the sister of one's father or mother"),
    ("ail", "ale",
     "be unwell or cause trouble to",
     "a beer brewed by warm fermentation"),
    ("air", "heir",
     "the invisible mixture of gases surrounding the earth",
     "a person legally entitled to inherit an estate"),
    ("aisle", "isle",
     "a passage between rows of seats",
     "a small island"),
    ("altar", "alter",
     "a raised table used for religious rites",
     "make a change to something"),
    ("ascent", "assent",
     "the act of climbing or moving upward",
     "the expression of agreement or approval"),
    ("bald", "bawled",
     "having little or no hair on the head",
     "cried or shouted loudly"),
    ("ball", "bawl",
     "a round object thrown or kicked in games",
     "cry or shout at the top of one's voice"),
    ("bard", "barred",
     "a poet who composes and recites verses",
     "blocked or officially excluded"),
    ("bazaar", "bizarre",
     "a market with rows of small shops and stalls",
     "strikingly strange or unusual"),
    ("beau", "bow",
     "a woman's male admirer or sweetheart",
     "bend the head or body as a sign of respect"),
    ("bell", "belle",
     "a hollow metal object that rings when struck",
     "a woman celebrated for her beauty"),
    ("boarder", "border",
     "a person who pays for regular room and meals",
     "the line dividing two regions"),
    ("bolder", "boulder",
     "more daring and confident",
     "a large smooth rounded mass of rock"),
    ("bough", "bow",
     "a main branch of a tree",
     "bend the body forward as a greeting"),
    ("braid", "brayed",
     "hair woven into interlaced strands",
     "uttered the loud harsh cry of a donkey"),
    ("caller", "collar",
     "a person who makes a telephone call",
     "the band of a garment that fits around the neck"),
    ("canon", "cannon",
     "an established rule or accepted body of works",
     "a large heavy mounted gun"),
    ("carat", "carrot",
     "a unit of weight used for precious stones",
     "a tapering orange root eaten as a vegetable"),
    ("cast", "caste",
     "the group of actors performing a play",
     "a hereditary social class"),
    ("cede", "seed",
     "formally give up territory or rights",
     "the small hard grain from which a plant grows"),
    ("ceiling", "sealing",
     "the overhead interior surface of a room",
     "closing something tightly to prevent leaks"),
    ("cellar", "seller",
     "an underground room used for storage",
     "a person who offers goods in exchange for money"),
    ("censor", "sensor",
     "an official who removes objectionable material",
     "a device that detects a physical property"),
    ("cheap", "cheep",
     "low in price or of poor quality",
     "the faint shrill cry of a young bird"),
    ("chilly", "chili",
     "uncomfortably cool in temperature",
     "a small hot pepper pod used in cooking"),
    ("choral", "coral",
     "sung or performed by a choir",
     "the hard branching skeleton built by marine polyps"),
    ("chute", "shoot",
     "an inclined channel for sliding things downward",
     "fire a projectile from a weapon"),
    ("clause", "claws",
     "a distinct section of a legal document",
     "the sharp curved nails on an animal's feet"),
    ("council", "counsel",
     "an assembly that governs or advises",
     "advice given formally on a problem"),
    ("cruise", "crews",
     "sail about from place to place for pleasure",
     "the teams of workers that operate ships"),
    ("cymbal", "symbol",
     "a brass plate struck to make a ringing crash",
     "a thing that stands for something else"),
    ("desert", "dessert",
     "a dry barren region with little rainfall",
     "the sweet course served at the end of a meal"),
    ("ducked", "duct",
     "lowered the head or body quickly",
     "a pipe or channel that carries air or liquid"),
    ("fined", "find",
     "punished with a payment of money",
     "come upon something after searching"),
    ("flew", "flu",
     "moved through the air on wings",
     "a contagious viral illness with fever and aches"),
    ("flex", "flecks",
     "bend a limb or tighten a muscle",
     "tiny spots or particles scattered about"),
    ("friar", "fryer",
     "a man belonging to a religious order",
     "a young chicken suitable for frying"),
    ("gait", "gate",
     "a particular manner of walking",
     "a hinged barrier that closes an opening in a fence"),
    ("gorilla", "guerrilla",
     "the largest of the great apes",
     "a fighter in an irregular independent army"),
    ("hangar", "hanger",
     "a large shelter for housing aircraft",
     "a shaped frame for suspending clothes"),
    ("hay", "hey",
     "grass cut and dried for animal fodder",
     "an exclamation used to attract attention"),
    ("him", "hymn",
     "that man or boy already mentioned",
     "a song of praise sung to a god"),
    ("hoard", "horde",
     "a hidden store of money or valued objects",
     "a large restless crowd on the move"),
    ("hoes", "hose",
     "long-handled tools with flat blades for weeding",
     "a flexible tube for conveying water"),
    ("holy", "wholly",
     "sacred and devoted to a god",
     "completely and entirely"),
    ("humerus", "humorous",
     "the long bone of the upper arm",
     "causing amusement and laughter"),
    ("incite", "insight",
     "stir up or provoke to action",
     "a clear and deep understanding"),
    ("knave", "nave",
     "a dishonest and unscrupulous rascal",
     "the long central hall of a church"),
    ("knew", "new",
     "had knowledge or awareness of",
     "recently made or introduced"),
    ("lapse", "laps",
     "a brief failure of memory or attention",
     "complete circuits of a racetrack"),
    ("leased", "least",
     "rented out under a contract",
     "smallest in amount or degree"),
    ("lichen", "liken",
     "a crusty growth of fungus and algae on rocks and trees",
     "point out the resemblance of one thing to another"),
    ("lightning", "lightening",
     "a bright flash of electricity during a storm",
     "making a load less heavy"),
    ("loot", "lute",
     "goods taken by force or dishonesty",
     "a pear-shaped stringed instrument of the renaissance"),
    ("lumbar", "lumber",
     "relating to the lower part of the back",
     "timber sawed into rough boards"),
    ("marshal", "martial",
     "an officer responsible for keeping order",
     "relating to war or the life of soldiers"),
    ("minor", "miner",
     "lesser in importance or seriousness",
     "a worker who digs ore or coal from the earth"),
    ("moan", "mown",
     "a long low sound of grief or pain",
     "cut down as standing grass"),
    ("moat", "mote",
     "a deep wide defensive ditch around a castle",
     "a tiny speck of dust"),
    ("mode", "mowed",
     "a particular way or manner of doing",
     "cut down grass with a blade or machine"),
    ("mustard", "mustered",
     "a pungent yellow condiment made from ground seeds",
     "gathered troops together for inspection"),
    ("one", "won",
     "the lowest cardinal number",
     "came first in a contest or battle"),
    ("overseas", "oversees",
     "across an ocean in a foreign land",
     "watches over and directs the work of others"),
    ("paced", "paste",
     "walked back and forth with regular steps",
     "a soft moist mixture used as an adhesive"),
    ("packed", "pact",
     "filled tightly with things",
     "a formal agreement between parties"),
    ("parish", "perish",
     "the local district served by its own church",
     "die or be destroyed"),
    ("pearl", "purl",
     "a lustrous gem formed inside an oyster",
     "a basic backwards stitch in knitting"),
    ("pier", "peer",
     "a platform on pillars extending over water",
     "a person of the same age or standing"),
    ("plum", "plumb",
     "a sweet purple fruit with a central stone",
     "exactly vertical or thoroughly"),
    ("pried", "pride",
     "forced open with leverage",
     "deep satisfaction in one's achievements"),
    ("quarts", "quartz",
     "units of liquid measure equal to two pints",
     "a hard crystalline mineral found in many rocks"),
    ("raised", "razed",
     "lifted up or brought up from childhood",
     "completely demolished to the ground"),
    ("rapt", "wrapped",
     "completely absorbed and engrossed",
     "enclosed in paper or soft material"),
    ("reek", "wreak",
     "give off a strong unpleasant smell",
     "inflict damage or havoc"),
    ("residence", "residents",
     "the place where a person lives",
     "the people who live in a particular place"),
    ("retch", "wretch",
     "strain as if about to vomit",
     "a miserable and unfortunate person"),
    ("review", "revue",
     "a critical evaluation of a work",
     "a light show of songs and comic sketches"),
    ("rye", "wry",
     "a hardy grain used for bread and whiskey",
     "cleverly and often grimly ironic"),
    ("scull", "skull",
     "a light narrow racing rowboat",
     "the bony framework of the head"),
    ("seas", "seize",
     "the great bodies of salt water",
     "take hold of suddenly and forcibly"),
    ("shone", "shown",
     "gave off a steady light",
     "displayed or presented for viewing"),
    ("side", "sighed",
     "a surface or position to the left or right",
     "let out a long deep audible breath"),
    ("slay", "sleigh",
     "kill in a violent way",
     "a sledge drawn by horses over snow"),
    ("sleight", "slight",
     "skillful deception done with quick hands",
     "small in degree or importance"),
    ("soared", "sword",
     "flew or rose high into the air",
     "a weapon with a long sharpened metal blade"),
    ("stile", "style",
     "a set of steps for climbing over a fence",
     "a distinctive manner of expression"),
    ("sundae", "sunday",
     "a dish of ice cream with sweet toppings",
     "the day of the week set aside for rest"),
    ("surf", "serf",
     "ride breaking waves on a board",
     "a farm laborer bound to his lord's land"),
    ("tacks", "tax",
     "short sharp nails with broad flat heads",
     "a compulsory payment levied by a government"),
    ("tease", "teas",
     "make fun of in a playful way",
     "hot drinks brewed from dried leaves"),
    ("tense", "tents",
     "stretched tight or nervously anxious",
     "portable shelters of fabric stretched over poles"),
    ("thrown", "throne",
     "propelled through the air with the arm",
     "the ceremonial chair of a monarch"),
    ("thyme", "time",
     "a low-growing aromatic herb used in cooking",
     "the continuous sequence in which events occur"),
    ("troop", "troupe",
     "a body of soldiers or scouts",
     "a traveling company of performers"),
    ("vale", "veil",
     "a valley, especially a broad river valley",
     "a piece of fine fabric worn over the face"),
    ("wail", "whale",
     "a long loud high-pitched cry of grief",
     "a very large marine mammal with a horizontal tail"),
    ("waive", "wave",
     "voluntarily give up a right or claim",
     "move the hand to and fro in greeting"),
    ("ware", "wear",
     "manufactured articles offered for sale",
     "have clothing on the body"),
    ("whirled", "world",
     "spun around rapidly",
     "the earth together with all its inhabitants"),
    ("yore", "your",
     "time long past",
     "belonging to the person being addressed"),
    ("ceded", "seeded",
     "formally surrendered to another",
     "planted with seed or ranked in a tournament"),
    ("chased", "chaste",
     "pursued in order to catch",
     "morally pure and modest"),
    ("coo", "coup",
     "the soft murmuring call of a dove",
     "a sudden successful stroke or takeover"),
    ("crewed", "crude",
     "served as the working team of a vessel",
     "in a raw or unrefined state"),
    ("earnest", "ernest",
     "serious and sincere in intention",
     "a man's given name borne by famous writers"),
    ("fazed", "phased",
     "disturbed or disconcerted",
     "carried out in planned stages"),
    ("gnu", "knew",
     "a large african antelope with a mane",
     "had knowledge or awareness of"),
    ("grays", "graze",
     "neutral colors between black and white",
     "feed on growing grass in a field"),
    ("guyed", "guide",
     "steadied with a rope or cable",
     "a person who shows the way to others"),
    ("heed", "he'd",
     "pay careful attention to",
     "a contraction meaning he would or he had"),
    ("hertz", "hurts",
     "the unit of frequency of one cycle per second",
     "causes physical pain"),
    ("jewel", "joule",
     "a precious stone cut for ornament",
     "the standard unit of work or energy"),
    ("knit", "nit",
     "make fabric by interlocking loops of yarn",
     "the egg of a louse attached to hair"),
    ("lack", "lac",
     "the state of being without something",
     "a resinous secretion used in making varnish"),
    ("links", "lynx",
     "the connected rings of a chain",
     "a short-tailed wildcat with tufted ears"),
    ("mall", "maul",
     "a large enclosed shopping center",
     "attack and injure by tearing"),
    ("nay", "neigh",
     "a formal vote or answer of no",
     "the long high-pitched cry of a horse"),
    ("ode", "owed",
     "a lyric poem addressed to a subject",
     "required to pay or repay"),
    ("plait", "plate",
     "a braided length of hair or straw",
     "a shallow dish from which food is eaten"),
    ("pleas", "please",
     "urgent emotional requests",
     "give enjoyment or satisfaction to"),
    ("prays", "praise",
     "addresses a god in worship",
     "the expression of warm approval"),
    ("prose", "pros",
     "ordinary written language without meter",
     "arguments or experts in favor of something"),
    ("rues", "ruse",
     "bitterly regrets",
     "a trick meant to deceive"),
    ("sealing", "ceiling",
     "closing something tightly against leaks",
     "the overhead interior surface of a room"),
    ("shoo", "shoe",
     "drive away by waving and crying out",
     "a fitted outer covering for the foot"),
    ("sighs", "size",
     "long deep audible breaths of relief or sadness",
     "the overall dimensions or magnitude of a thing"),
    ("stayed", "staid",
     "remained in the same place",
     "sedate and unadventurous by temperament"),
    ("sweet", "suite",
     "having the pleasant taste of sugar",
     "a set of connected rooms in a hotel"),
    ("tic", "tick",
     "a habitual involuntary twitch of a muscle",
     "a light regular clicking sound"),
    ("vial", "vile",
     "a small glass container for liquids",
     "morally despicable or extremely unpleasant"),
    ("wade", "weighed",
     "walk through water that resists movement",
     "measured the heaviness of"),
    ("whirr", "were",
     "a continuous low buzzing sound",
     "existed in the past"),
    ("yews", "use",
     "evergreen trees with springy wood favored for bows",
     "put into service for a purpose"),
]

HOMOGRAPHIC = [
    ("sweep",
     "sweep with a broom or as if with a broom",
     "win an overwhelming victory in or on"),
    ("fluke",
     "a stroke of luck",
     "either of the two lobes of the tail of a cetacean"),
    ("catch",
     "grab something moving through the air",
     "a hidden drawback or tricky condition"),
    ("pine",
     "a coniferous evergreen tree with long needles",
     "long painfully for something lost"),
    ("jerky",
     "meat cut into strips and dried",
     "marked by abrupt stops and starts"),
    ("makeup",
     "cosmetics applied to the face",
     "a session scheduled to redo missed work"),
    ("kickoff",
     "the kick that starts play in a football game",
     "the start or launch of an event"),
    ("pitch",
     "throw a ball toward the batter",
     "the highness or lowness of a sound"),
    ("pinch",
     "squeeze sharply between finger and thumb",
     "a very small amount of an ingredient"),
    ("pupil",
     "a young student under a teacher's care",
     "the dark circular opening at the center of the eye"),
    ("kid",
     "a child or young person",
     "a young goat"),
    ("bright",
     "giving out or reflecting much light",
     "intelligent and quick-witted"),
    ("light",
     "the radiation that makes vision possible",
     "of little weight"),
    ("sign",
     "a board displaying information or directions",
     "communicate using hand gestures"),
    ("connection",
     "a link joining two things together",
     "an influential person who can provide favors"),
    ("sentence",
     "a group of words expressing a complete thought",
     "the punishment ordered by a court"),
    ("go",
     "move from one place to another",
     "a turn or attempt in a game"),
    ("turn",
     "change the direction of movement",
     "an opportunity that comes in rotation"),
    ("get",
     "come to have or receive",
     "understand a joke or idea"),
    ("bank",
     "a financial institution that accepts deposits",
     "the sloping land beside a river"),
    ("bat",
     "a club used to hit a ball",
     "a nocturnal flying mammal"),
    ("bark",
     "the short loud cry of a dog",
     "the tough outer covering of a tree trunk"),
    ("spring",
     "the season after winter",
     "a coiled elastic metal device"),
    ("scale",
     "an instrument for weighing",
     "climb up or over something high"),
    ("match",
     "a contest between opponents",
     "a short stick tipped with material that ignites by friction"),
    ("ring",
     "a circular band worn on the finger",
     "the clear resonant sound of a bell"),
    ("wave",
     "a moving ridge on the surface of water",
     "move the hand to and fro in greeting"),
    ("park",
     "a public green space for recreation",
     "bring a vehicle to a halt and leave it"),
    ("bolt",
     "a threaded metal fastener",
     "run away suddenly"),
    ("bowl",
     "a round deep dish for food",
     "roll a heavy ball toward pins"),
    ("cap",
     "a soft flat hat with a visor",
     "an upper limit placed on something"),
    ("charge",
     "demand a price as payment",
     "rush forward in attack"),
    ("chest",
     "the front of the body between neck and belly",
     "a large strong box used for storage"),
    ("club",
     "an association of people with a shared interest",
     "a heavy stick used as a weapon"),
    ("coat",
     "an outer garment with sleeves",
     "a covering layer of paint"),
    ("count",
     "determine the total number of",
     "a european nobleman"),
    ("court",
     "the place where legal cases are heard",
     "try to win the affection of"),
    ("crane",
     "a tall machine for lifting heavy loads",
     "a large wading bird with long legs"),
    ("current",
     "a steady directed flow of water or air",
     "belonging to the present time"),
    ("date",
     "a particular day of the month",
     "the sweet dark fruit of a palm tree"),
    ("deck",
     "the floor of a ship open to the sky",
     "a full pack of playing cards"),
    ("draft",
     "a preliminary version of a piece of writing",
     "a current of cool air in an enclosed space"),
    ("drill",
     "a tool for boring holes",
     "a repetitive exercise for training"),
    ("fall",
     "move downward freely under gravity",
     "the season after summer"),
    ("fan",
     "a device that moves air for cooling",
     "an enthusiastic devotee or admirer"),
    ("file",
     "a folder holding papers in order",
     "a steel tool with rough ridges for smoothing"),
    ("fine",
     "of very high quality",
     "a sum of money exacted as a penalty"),
    ("firm",
     "a business partnership or company",
     "solid and unyielding to pressure"),
    ("fly",
     "move through the air on wings",
     "a small two-winged insect"),
    ("fold",
     "bend something over on itself",
     "a fenced enclosure for sheep"),
    ("foot",
     "the part of the leg below the ankle",
     "a unit of length equal to twelve inches"),
    ("game",
     "an activity played for amusement",
     "wild animals hunted for sport or food"),
    ("grade",
     "a level of study in school",
     "the steepness of a road or slope"),
    ("ground",
     "the solid surface of the earth",
     "crushed into fine particles"),
    ("hand",
     "the grasping part at the end of the arm",
     "a worker hired for manual labor"),
    ("head",
     "the upper part of the body containing the brain",
     "the person who leads a group"),
    ("jam",
     "fruit boiled with sugar into a thick spread",
     "a crowded blockage that stops movement"),
    ("key",
     "a shaped metal instrument that opens a lock",
     "of crucial importance"),
    ("lap",
     "the level place formed by the thighs when seated",
     "one complete circuit of a track"),
    ("lead",
     "show the way by going in front",
     "a heavy soft dull-gray metal"),
    ("letter",
     "a written message sent by post",
     "a symbol in an alphabet"),
    ("line",
     "a long narrow mark on a surface",
     "a row of people waiting their turn"),
    ("lock",
     "a fastening that can be opened only with a key",
     "a gated section of canal for raising boats"),
    ("log",
     "a section of a felled tree trunk",
     "an official written record of events"),
    ("mine",
     "an excavation from which ore is taken",
     "an explosive device hidden underground or at sea"),
    ("mint",
     "an aromatic herb used for flavoring",
     "the place where coins are manufactured"),
    ("nail",
     "a thin pointed metal fastener driven with a hammer",
     "the horny plate covering a fingertip"),
    ("note",
     "a brief written record or reminder",
     "a single musical tone of definite pitch"),
    ("organ",
     "a body part performing a vital function",
     "a large keyboard instrument sounded by pipes"),
    ("palm",
     "the inner surface of the hand",
     "a tropical tree with a crown of fan-shaped leaves"),
    ("pen",
     "an instrument for writing with ink",
     "a small fenced enclosure for animals"),
    ("pick",
     "choose from a number of alternatives",
     "a heavy tool with a pointed head for breaking ground"),
    ("plant",
     "a living organism that grows in soil",
     "a factory where an industrial process happens"),
    ("play",
     "engage in games for enjoyment",
     "a dramatic work written for the stage"),
    ("point",
     "the sharp tapered end of an object",
     "the main idea of an argument"),
    ("pool",
     "a small body of still water",
     "a game played with colored balls on a cloth table"),
    ("pop",
     "a sharp small explosive sound",
     "an informal word for father"),
    ("post",
     "an upright pole fixed in the ground",
     "letters and parcels delivered by mail"),
    ("pound",
     "a unit of weight equal to sixteen ounces",
     "strike heavily and repeatedly"),
    ("press",
     "push steadily with force against",
     "the newspapers and journalists collectively"),
    ("punch",
     "a quick blow delivered with the fist",
     "a mixed drink of fruit juices served from a bowl"),
    ("race",
     "a contest of speed",
     "a group of people sharing common descent"),
    ("rock",
     "a large mass of stone",
     "sway gently back and forth"),
    ("row",
     "a number of things arranged in a line",
     "propel a boat with oars"),
    ("ruler",
     "a person who governs a country",
     "a straight strip marked for measuring length"),
    ("run",
     "move fast using the legs",
     "operate or manage an enterprise"),
    ("saw",
     "a hand tool with a toothed blade for cutting wood",
     "a wise old saying often repeated"),
    ("seal",
     "a sleek aquatic mammal with flippers",
     "close something tightly shut"),
    ("season",
     "one of the four divisions of the year",
     "improve the flavor of food with salt and spices"),
    ("second",
     "coming immediately after the first",
     "a sixtieth part of a minute"),
    ("set",
     "put something in a particular place",
     "a group of matching or related items"),
    ("shake",
     "move with quick short vibrations",
     "a cold drink of milk and ice cream blended together"),
    ("sharp",
     "having a fine edge able to cut",
     "exactly at the stated time"),
    ("shed",
     "a small simple outbuilding for storage",
     "cast off or lose something naturally"),
    ("sheet",
     "a large rectangle of bed linen",
     "a flat thin rectangular piece of paper or metal"),
    ("shot",
     "the firing of a gun",
     "an attempt to score in a game"),
    ("sink",
     "a fixed basin with a drain for washing",
     "go down below the surface of water"),
    ("slip",
     "slide accidentally and lose one's balance",
     "a small piece of paper"),
    ("spell",
     "name the letters of a word in order",
     "words believed to have magical power"),
    ("spot",
     "a small round mark differing in color",
     "catch sight of something"),
    ("spread",
     "open out over a larger area",
     "a soft food for covering bread"),
    ("square",
     "a plane figure with four equal sides",
     "an open public area in the middle of a town"),
    ("stamp",
     "a small gummed label stuck on mail",
     "bring the foot down heavily on the ground"),
    ("star",
     "a huge glowing ball of gas in the night sky",
     "a famous and celebrated performer"),
    ("stick",
     "a thin piece of cut or broken wood",
     "fasten by means of an adhesive"),
    ("store",
     "a shop where goods are sold",
     "keep something for future use"),
    ("story",
     "an account of real or imaginary events",
     "one horizontal level of a building"),
    ("strike",
     "hit forcibly and deliberately",
     "a refusal to work organized by employees"),
    ("swallow",
     "cause food to pass down the throat",
     "a small swift-flying migratory songbird"),
    ("table",
     "a piece of furniture with a flat raised top",
     "an orderly arrangement of data in rows and columns"),
    ("tank",
     "a large container for storing liquid or gas",
     "a heavily armored tracked combat vehicle"),
    ("tie",
     "fasten or secure with string or cord",
     "an equal score at the end of a contest"),
    ("tip",
     "the pointed or rounded end of something",
     "a small sum of money given for good service"),
    ("toast",
     "sliced bread browned on both sides by heat",
     "raise a glass and drink in honor of someone"),
    ("track",
     "a rough path worn by repeated use",
     "follow the trail or movements of"),
    ("train",
     "a connected line of railway cars",
     "develop a skill through instruction and practice"),
    ("trip",
     "a journey to a place and back",
     "catch one's foot and stumble"),
    ("trunk",
     "the main woody stem of a tree",
     "a large strong case for transporting belongings"),
    ("well",
     "a deep shaft dug to reach water",
     "in good health"),
    ("yard",
     "the enclosed ground around a house",
     "a unit of length equal to three feet"),
    ("arm",
     "the upper limb from shoulder to hand",
     "supply with weapons"),
    ("back",
     "the rear surface of the body from shoulders to hips",
     "give support or endorsement to"),
    ("bill",
     "a statement of money owed",
     "the horny beak of a bird"),
    ("block",
     "a solid rectangular piece of hard material",
     "stop the movement or progress of"),
    ("board",
     "a long flat piece of sawed timber",
     "the group of directors who run a company"),
    ("book",
     "a set of printed pages bound together",
     "reserve a place or ticket in advance"),
    ("branch",
     "a woody limb growing from a tree trunk",
     "a local office of a larger organization"),
    ("bridge",
     "a structure carrying a road across a river",
     "a card game for two pairs of players"),
    ("brush",
     "an implement with bristles for grooming or painting",
     "touch lightly in passing"),
    ("bug",
     "a small crawling insect",
     "a hidden fault in a computer program"),
    ("call",
     "cry out loudly to attract attention",
     "a conversation held over the telephone"),
    ("case",
     "an instance of a particular situation",
     "a container designed to hold or protect something"),
    ("change",
     "make or become different",
     "the coins returned when payment exceeds the price"),
    ("check",
     "examine for accuracy or quality",
     "a written order directing a bank to pay money"),
    ("chip",
     "a small thin piece broken from something hard",
     "a tiny wafer of semiconductor holding a circuit"),
    ("coach",
     "a person who trains athletes",
     "a large closed horse-drawn carriage"),
    ("cold",
     "at a low temperature",
     "a common infection causing sneezing and a sore throat"),
    ("crack",
     "a narrow break or split in a surface",
     "a sudden sharp explosive noise"),
    ("cycle",
     "a series of events repeated in the same order",
     "ride a bicycle"),
    ("dash",
     "run somewhere in a great hurry",
     "a small amount of an ingredient added in cooking"),
    ("down",
     "toward a lower place or position",
     "the soft fine feathers of a young bird"),
    ("dress",
     "a one-piece garment for a woman",
     "put clothes on oneself"),
    ("drive",
     "operate and steer a vehicle",
     "a strong motivating inner urge"),
    ("drop",
     "let something fall",
     "a small rounded quantity of liquid"),
    ("duck",
     "a swimming bird with a broad flat bill",
     "lower the head or body quickly to avoid something"),
    ("ear",
     "the organ of hearing",
     "the seed-bearing head of a cereal plant"),
    ("face",
     "the front of the head from forehead to chin",
     "confront and deal with directly"),
    ("fast",
     "moving or able to move at high speed",
     "abstain from eating food"),
    ("felt",
     "a cloth made of matted compressed fibers",
     "perceived by touch or emotion"),
    ("field",
     "an open area of cleared land",
     "a particular branch of study or activity"),
    ("figure",
     "a number written as a symbol",
     "the shape of a human body"),
    ("fire",
     "the flames and heat of something burning",
     "dismiss an employee from a job"),
    ("fish",
     "a cold-blooded animal that lives and breathes in water",
     "search by groping or feeling for something hidden"),
    ("fit",
     "in good physical condition",
     "be the right size and shape for"),
    ("flat",
     "smooth and level without bumps",
     "a set of rooms forming one home within a building"),
    ("floor",
     "the lower surface of a room",
     "astonish someone completely"),
    ("fork",
     "a pronged implement for eating",
     "the point where a road divides in two"),
    ("frame",
     "a rigid border holding a picture",
     "make someone appear guilty of a crime"),
    ("fresh",
     "recently made or obtained",
     "pleasantly cool and clean"),
    ("front",
     "the side that faces forward",
     "a business used to conceal an illegal activity"),
    ("gag",
     "a joke or comic routine",
     "choke or retch"),
    ("grave",
     "a plot of ground in which a body is buried",
     "serious and solemn in manner"),
    ("grill",
     "a metal frame for cooking food over heat",
     "question somebody relentlessly"),
    ("gum",
     "the firm tissue around the roots of the teeth",
     "a sweet sticky substance for chewing"),
    ("hatch",
     "emerge from an egg",
     "a small covered opening in a deck or floor"),
    ("hide",
     "put or keep out of sight",
     "the raw skin of an animal"),
    ("hit",
     "strike with the hand or an object",
     "a song or show that becomes very popular"),
    ("hold",
     "grasp and keep in the hands",
     "the storage space below a ship's deck"),
    ("hook",
     "a curved piece of metal for catching or hanging",
     "a short swinging punch in boxing"),
    ("horn",
     "a hard pointed growth on an animal's head",
     "a brass wind instrument with a flared bell"),
    ("host",
     "a person who entertains guests",
     "a very large number of things"),
    ("iron",
     "a strong silvery magnetic metal",
     "press clothes smooth with a heated tool"),
    ("jar",
     "a wide-mouthed glass container",
     "shake or shock with a sudden jolt"),
    ("judge",
     "the official who presides over a court",
     "form an opinion about something"),
    ("kind",
     "a category of things that are alike",
     "gentle and considerate toward others"),
    ("lift",
     "raise to a higher position",
     "a free ride in another person's vehicle"),
    ("litter",
     "rubbish scattered in a public place",
     "a group of young animals born at one birth"),
    ("loaf",
     "a shaped mass of bread baked in one piece",
     "pass time idly doing nothing"),
    ("lot",
     "a large number or amount",
     "a plot of land for a particular use"),
    ("mass",
     "a large body of matter with no definite shape",
     "the quantity of matter a body contains"),
    ("mold",
     "a furry fungal growth on damp material",
     "a hollow container used to shape molten material"),
    ("mouse",
     "a small long-tailed rodent",
     "a hand-held device that moves a pointer on a screen"),
    ("nut",
     "a dry fruit enclosed in a hard shell",
     "a small metal block that screws onto a bolt"),
    ("order",
     "a request for goods to be supplied",
     "the arrangement of things following a rule"),
    ("pack",
     "fill a bag or container with belongings",
     "a group of wild animals that hunt together"),
    ("paddle",
     "a short oar used without a rowlock",
     "walk barefoot in shallow water"),
    ("page",
     "one side of a sheet in a book",
     "a young attendant at a formal event"),
    ("part",
     "a piece or segment of a whole",
     "leave someone's company"),
    ("party",
     "a social gathering of invited guests",
     "an organization seeking political power"),
    ("pass",
     "move past or go by something",
     "a document granting permission to enter"),
    ("patient",
     "a person receiving medical treatment",
     "able to wait calmly without complaint"),
    ("pit",
     "a large deep hole in the ground",
     "the hard stone at the center of a fruit"),
    ("plot",
     "the main story line of a novel or film",
     "a small marked piece of ground"),
    ("port",
     "a town with a harbor where ships dock",
     "the left-hand side of a ship facing forward"),
    ("pot",
     "a deep round container used for cooking",
     "the total money bet in one hand of a card game"),
    ("prune",
     "a dried plum with wrinkled skin",
     "trim a plant by cutting away overgrowth"),
    ("pump",
     "a machine that raises or moves liquid",
     "question someone persistently for information"),
    ("quarter",
     "one of four equal parts",
     "a coin worth twenty-five cents"),
    ("racket",
     "a loud unpleasant continuing noise",
     "a strung bat used in tennis and badminton"),
    ("rash",
     "an eruption of red spots on the skin",
     "acting hastily without due care"),
    ("rest",
     "cease activity in order to relax",
     "the remaining part of something"),
    ("rule",
     "an explicit regulation governing conduct",
     "exercise ultimate power over a people"),
    ("safe",
     "protected from danger or risk",
     "a strong lockable box for storing valuables"),
    ("school",
     "an institution for educating children",
     "a large group of fish swimming together"),
    ("score",
     "the number of points gained in a game",
     "a group of twenty"),
    ("screen",
     "the flat surface on which images are displayed",
     "conceal or shelter from view"),
    ("shade",
     "an area kept cool and dim out of the sunlight",
     "a particular variety of a color"),
    ("shower",
     "a brief fall of rain",
     "a wash taken standing under a spray of water"),
    ("slide",
     "move smoothly along a surface",
     "a small transparent mounted photograph"),
    ("slug",
     "a slow shell-less land mollusk",
     "a heavy blow delivered with the fist"),
    ("snap",
     "break suddenly with a sharp crack",
     "an informal photograph taken quickly"),
    ("sock",
     "a knitted covering for the foot",
     "hit someone forcefully"),
    ("space",
     "the boundless region beyond the earth's atmosphere",
     "an empty area available for use"),
    ("spoke",
     "one of the bars joining the hub of a wheel to its rim",
     "uttered words"),
    ("staff",
     "the people employed by an organization",
     "a long sturdy stick carried as a support"),
    ("stage",
     "the raised platform on which actors perform",
     "a single step in a longer process"),
    ("stall",
     "a compartment for one animal in a barn",
     "delay by being deliberately evasive"),
    ("stand",
     "support oneself upright on the feet",
     "a small open-air platform for selling goods"),
    ("state",
     "the particular condition something is in",
     "a politically organized territory"),
    ("steer",
     "guide the course of a vehicle or vessel",
     "a castrated male of domestic cattle"),
    ("stem",
     "the main upward axis of a plant",
     "stop the flow or spread of something"),
    ("stern",
     "strict and severe in manner",
     "the rear part of a ship or boat"),
    ("stock",
     "goods kept on hand for sale",
     "a liquid base for soup made by simmering bones"),
    ("strain",
     "an injury from overstretching a muscle",
     "pour through a sieve to separate solids"),
    ("straw",
     "dry cut stalks of grain used as bedding",
     "a thin tube for sucking up a drink"),
    ("stream",
     "a small narrow river",
     "transmit media continuously over a network"),
    ("stroke",
     "a single complete movement in swimming or rowing",
     "move the hand gently over a surface"),
    ("suit",
     "a matching set of jacket and trousers",
     "be convenient or acceptable for"),
    ("tap",
     "strike with a quick light blow",
     "a valve controlling the flow of water from a pipe"),
    ("temple",
     "a building devoted to religious worship",
     "the flat part on either side of the forehead"),
    ("term",
     "a fixed period during which something lasts",
     "a word with a precise technical meaning"),
    ("tick",
     "the light regular clicking of a clock",
     "a small bloodsucking parasite of the spider family"),
    ("till",
     "up to the time of",
     "the cash drawer of a shop register"),
    ("toll",
     "a fee charged for using a road or bridge",
     "ring a bell slowly and solemnly"),
    ("top",
     "the highest point or part",
     "a toy that spins on a point"),
    ("vault",
     "a strongly protected room for valuables",
     "jump over something using the hands for support"),
    ("vessel",
     "a craft built for travel on water",
     "a tube through which blood circulates"),
    ("volume",
     "the degree of loudness of a sound",
     "a single book forming part of a series"),
    ("watch",
     "a small timepiece worn on the wrist",
     "look at attentively over a period"),
    ("wake",
     "stop sleeping and become alert",
     "the track of waves left by a moving ship"),
    ("yarn",
     "spun fiber used for knitting or weaving",
     "a long rambling and entertaining story"),
    ("bear",
     "a heavy wild animal with thick fur",
     "patiently endure something difficult"),
    ("bow",
     "a weapon for shooting arrows",
     "bend the head or body in respect"),
    ("can",
     "a sealed metal container for food or drink",
     "be able to do something"),
    ("clip",
     "a small device for holding things together",
     "cut something short with shears"),
    ("dice",
     "small numbered cubes thrown in games of chance",
     "cut food into small uniform cubes"),
    ("ferry",
     "a boat carrying passengers on a regular route",
     "transport people or goods back and forth"),
    ("gear",
     "a toothed wheel that transmits motion",
     "the equipment needed for an activity"),
    ("hamper",
     "a large covered basket for laundry or food",
     "hinder or obstruct progress"),
    ("jumper",
     "a knitted garment worn on the upper body",
     "a person or animal that leaps"),
    ("lean",
     "incline the body from the vertical",
     "thin and containing little fat"),
    ("limp",
     "walk unevenly because of an injured leg",
     "lacking stiffness or firmness"),
    ("marble",
     "a hard crystalline stone used in sculpture",
     "a small glass ball used in children's games"),
    ("novel",
     "a long fictional prose narrative",
     "new and original in an interesting way"),
    ("patter",
     "the quick light tapping of rain or feet",
     "the rapid glib talk of a performer"),
    ("perch",
     "a branch or bar on which a bird rests",
     "a spiny-finned freshwater fish"),
    ("pitcher",
     "a container with a spout for pouring liquid",
     "the player who throws the ball to the batter"),
    ("racketeer",
     "a person who runs a dishonest scheme",
     "a player wielding a racket"),
    ("ram",
     "an adult male sheep",
     "crash into something with great force"),
    ("reserve",
     "keep back for future use",
     "a protected area set aside for wildlife"),
    ("scrub",
     "rub something hard to clean it",
     "low stunted vegetation covering poor ground"),
    ("squash",
     "crush something with pressure into a flat mass",
     "a vine vegetable with a hard rind"),
    ("tag",
     "a small label attached for identification",
     "a chasing game played by children"),
    ("tender",
     "soft and easy to chew",
     "a formal offer to supply goods at a stated price"),
    ("usher",
     "a person who shows people to their seats",
     "lead or escort into a new period"),
    ("whisk",
     "a looped wire utensil for beating eggs",
     "take somewhere suddenly and quickly"),
]

# Context vocabulary: topic -> [(keyword phrase, pos)]. Multi-token phrases
# carry the head word's tag. These feed context construction, the POS
# lexicon, and the embedding vocabulary.
TOPICS = {
    "farm": [
        ("hunts", "verb"), ("deer", "noun"), ("barn", "noun"),
        ("tractor", "noun"), ("harvest", "noun"), ("plow", "verb"),
        ("cattle", "noun"), ("sheep", "noun"), ("farmer", "noun"),
        ("fence", "noun"), ("hay bale", "noun"), ("rooster", "noun"),
    ],
    "ocean": [
        ("whale", "noun"), ("sailor", "noun"), ("harbor", "noun"),
        ("lighthouse", "noun"), ("dolphin", "noun"), ("anchor", "noun"),
        ("seaweed", "noun"), ("shipwreck", "noun"), ("dive", "verb"),
        ("coral reef", "noun"), ("fisherman", "noun"), ("gull", "noun"),
    ],
    "forest": [
        ("forest", "noun"), ("timber", "noun"), ("owl", "noun"),
        ("moss", "noun"), ("trail", "noun"), ("camp", "verb"),
        ("ranger", "noun"), ("squirrel", "noun"), ("thicket", "noun"),
        ("pine cone", "noun"), ("wolf", "noun"), ("cabin", "noun"),
    ],
    "kitchen": [
        ("chef", "noun"), ("oven", "noun"), ("recipe", "noun"),
        ("bake", "verb"), ("skillet", "noun"), ("spice", "noun"),
        ("butcher", "noun"), ("onion", "noun"), ("kettle", "noun"),
        ("pastry", "noun"), ("simmer", "verb"), ("apron", "noun"),
    ],
    "music": [
        ("opera", "noun"), ("orchestra conductors", "noun"),
        ("violin", "noun"), ("melody", "noun"), ("drummer", "noun"),
        ("rehearsal", "noun"), ("choir", "noun"), ("trumpet", "noun"),
        ("concert", "noun"), ("compose", "verb"), ("piano", "noun"),
        ("audience", "noun"),
    ],
    "school": [
        ("beauty school", "noun"), ("class", "noun"), ("teacher", "noun"),
        ("homework", "noun"), ("exam", "noun"), ("chalkboard", "noun"),
        ("recess", "noun"), ("study", "verb"), ("notebook", "noun"),
        ("professor", "noun"), ("graduate", "verb"), ("classroom", "noun"),
    ],
    "sports": [
        ("company football team", "noun"), ("meeting", "noun"),
        ("get together", "verb"), ("stadium", "noun"), ("referee", "noun"),
        ("goalkeeper", "noun"), ("tournament", "noun"), ("sprint", "verb"),
        ("locker room", "noun"), ("championship", "noun"),
        ("halftime", "noun"), ("scoreboard", "noun"),
    ],
    "space": [
        ("bright star", "noun"), ("einstein", "noun"), ("parents", "noun"),
        ("telescope", "noun"), ("astronaut", "noun"), ("rocket", "noun"),
        ("orbit", "noun"), ("galaxy", "noun"), ("comet", "noun"),
        ("launch", "verb"), ("planet", "noun"), ("observatory", "noun"),
    ],
    "construction": [
        ("construction workers", "noun"), ("scaffold", "noun"),
        ("blueprint", "noun"), ("crowbar", "noun"), ("cement", "noun"),
        ("ladder", "noun"), ("bulldozer", "noun"), ("bricklayer", "noun"),
        ("demolish", "verb"), ("warehouse", "noun"), ("girder", "noun"),
        ("jackhammer", "noun"),
    ],
    "medicine": [
        ("doctor", "noun"), ("nurse", "noun"), ("hospital", "noun"),
        ("surgeon", "noun"), ("bandage", "noun"), ("diagnose", "verb"),
        ("pharmacy", "noun"), ("ambulance", "noun"), ("vaccine", "noun"),
        ("stethoscope", "noun"), ("clinic", "noun"), ("therapy", "noun"),
    ],
    "law": [
        ("interpreters", "noun"), ("lawyer", "noun"), ("jury", "noun"),
        ("verdict", "noun"), ("testimony", "noun"), ("prosecutor", "noun"),
        ("courtroom", "noun"), ("evidence", "noun"), ("bailiff", "noun"),
        ("appeal", "verb"), ("contract", "noun"), ("witness stand", "noun"),
    ],
    "money": [
        ("banker", "noun"), ("budget", "noun"), ("invest", "verb"),
        ("savings", "noun"), ("cashier", "noun"), ("wallet", "noun"),
        ("mortgage", "noun"), ("auction", "noun"), ("dividend", "noun"),
        ("accountant", "noun"), ("vaults", "noun"), ("payday", "noun"),
    ],
    "travel": [
        ("airport", "noun"), ("luggage", "noun"), ("passport", "noun"),
        ("tourist", "noun"), ("railway", "noun"), ("voyage", "noun"),
        ("hotel lobby", "noun"), ("souvenir", "noun"), ("itinerary", "noun"),
        ("departure", "noun"), ("carriage", "noun"), ("explore", "verb"),
    ],
    "weather": [
        ("thunder", "noun"), ("blizzard", "noun"), ("forecast", "noun"),
        ("umbrella", "noun"), ("drought", "noun"), ("rainbow", "noun"),
        ("breeze", "noun"), ("frost", "noun"), ("humidity", "noun"),
        ("barometer", "noun"), ("cyclone", "noun"), ("sleet", "noun"),
    ],
    "garden": [
        ("gardener", "noun"), ("tulip", "noun"), ("compost", "noun"),
        ("greenhouse", "noun"), ("weeds", "noun"), ("shovel", "noun"),
        ("orchard", "noun"), ("blossom", "noun"), ("trellis", "noun"),
        ("lawn", "noun"), ("wheelbarrow", "noun"), ("prune hook", "noun"),
    ],
    "technology": [
        ("scientist", "noun"), ("liquid chemicals", "noun"),
        ("problem", "noun"), ("laboratory", "noun"), ("robot", "noun"),
        ("keyboard", "noun"), ("software", "noun"), ("circuit", "noun"),
        ("battery", "noun"), ("microscope", "noun"), ("experiment", "noun"),
        ("satellite", "noun"),
    ],
    "church": [
        ("chapel", "noun"), ("preacher", "noun"), ("steeple", "noun"),
        ("sermon", "noun"), ("organist", "noun"), ("congregation", "noun"),
        ("pew", "noun"), ("monastery", "noun"), ("candle", "noun"),
        ("procession", "noun"), ("blessing", "noun"), ("belfry", "noun"),
    ],
    "military": [
        ("soldier", "noun"), ("regiment", "noun"), ("barracks", "noun"),
        ("general", "noun"), ("parade", "noun"), ("salute", "verb"),
        ("trench", "noun"), ("sentry", "noun"), ("armory", "noun"),
        ("march", "verb"), ("uniform", "noun"), ("fortress", "noun"),
    ],
    "theater": [
        ("actor", "noun"), ("curtain", "noun"), ("spotlight", "noun"),
        ("director", "noun"), ("costume", "noun"), ("matinee", "noun"),
        ("dressing room", "noun"), ("applause", "noun"), ("comedy", "noun"),
        ("tragedy", "noun"), ("rehearse", "verb"), ("playwright", "noun"),
    ],
    "market": [
        ("fruit vendor", "noun"), ("daughter", "noun"), ("stallkeeper", "noun"),
        ("basket", "noun"), ("bargain", "verb"), ("scales", "noun"),
        ("melon", "noun"), ("customer", "noun"), ("awning", "noun"),
        ("peddler", "noun"), ("haggle", "verb"), ("marketplace", "noun"),
    ],
    "library": [
        ("librarian", "noun"), ("bookshelf", "noun"), ("catalog", "noun"),
        ("archive", "noun"), ("reading room", "noun"), ("whisper", "verb"),
        ("manuscript", "noun"), ("encyclopedia", "noun"), ("borrow", "verb"),
        ("index card", "noun"), ("atlas", "noun"), ("bindery", "noun"),
    ],
    "bakery": [
        ("baker", "noun"), ("croissant", "noun"), ("yeast", "noun"),
        ("frosting", "noun"), ("muffin", "noun"), ("rolling pin", "noun"),
        ("bagel", "noun"), ("cupcake", "noun"), ("sourdough", "noun"),
        ("pretzel", "noun"), ("glaze", "verb"), ("crumb", "noun"),
    ],
    "fishing": [
        ("angler", "noun"), ("trout", "noun"), ("tackle box", "noun"),
        ("rowboat", "noun"), ("minnow", "noun"), ("salmon", "noun"),
        ("fishing rod", "noun"), ("lure", "noun"), ("riverbank", "noun"),
        ("net", "noun"), ("wader", "noun"), ("catfish", "noun"),
    ],
    "mountain": [
        ("climber", "noun"), ("summit", "noun"), ("avalanche", "noun"),
        ("glacier", "noun"), ("sherpa", "noun"), ("altitude", "noun"),
        ("ridge", "noun"), ("crampon", "noun"), ("basecamp", "noun"),
        ("ascend", "verb"), ("canyon", "noun"), ("foothill", "noun"),
    ],
    "city": [
        ("mayor", "noun"), ("subway", "noun"), ("skyscraper", "noun"),
        ("taxi", "noun"), ("sidewalk", "noun"), ("billboard", "noun"),
        ("pigeon", "noun"), ("alley", "noun"), ("commute", "verb"),
        ("downtown", "noun"), ("crosswalk", "noun"), ("plaza", "noun"),
    ],
    "zoo": [
        ("zookeeper", "noun"), ("giraffe", "noun"), ("penguin", "noun"),
        ("enclosure", "noun"), ("elephant", "noun"), ("monkey", "noun"),
        ("feeding time", "noun"), ("lion", "noun"), ("tortoise", "noun"),
        ("aviary", "noun"), ("otter", "noun"), ("flamingo", "noun"),
    ],
}

# Fixed contexts that must exist in the shipped dataset. Each is (keywords,
# topic) with the topic steering embedding geometry.
FIXED_CONTEXTS = [
    (("hunts", "deer"), "farm"),
    (("whale",), "ocean"),
    (("construction", "workers"), "construction"),
    (("pin", "nose"), "medicine"),
    (("broom", "nation"), "city"),
    (("einstein", "parents"), "space"),
    (("bright", "star"), "space"),
    (("interpreters", "die"), "law"),
    (("scientist", "liquid chemicals", "problem"), "technology"),
    (("fruit vendor", "daughter"), "market"),
    (("opera", "orchestra conductors"), "music"),
    (("company football team", "meeting", "get together"), "sports"),
    (("beauty school", "class"), "school"),
]

# Standalone words needed by fixed contexts and corpus sentences.
EXTRA_VOCAB = [
    ("pin", "noun"), ("nose", "noun"), ("broom", "noun"), ("nation", "noun"),
    ("workers", "noun"), ("construction", "noun"), ("fruit", "noun"),
    ("vendor", "noun"), ("company", "noun"), ("football", "noun"),
    ("team", "noun"), ("liquid", "adj"), ("chemicals", "noun"),
    ("star", "noun"), ("bright", "adj"), ("wall", "noun"), ("door", "noun"),
    ("window", "noun"), ("morning", "noun"), ("evening", "noun"),
    ("village", "noun"), ("river", "noun"), ("mountain", "noun"),
    ("market", "noun"), ("street", "noun"), ("garden", "noun"),
    ("kitchen", "noun"), ("winter", "noun"), ("summer", "noun"),
    ("children", "noun"), ("neighbor", "noun"), ("stranger", "noun"),
    ("carried", "verb"), ("watched", "verb"), ("waited", "verb"),
    ("walked", "verb"), ("shouted", "verb"), ("whispered", "verb"),
    ("painted", "verb"), ("planted", "verb"), ("repaired", "verb"),
    ("borrowed", "verb"), ("counted", "verb"), ("folded", "verb"),
    ("quickly", "adv"), ("slowly", "adv"), ("loudly", "adv"),
    ("gently", "adv"), ("barely", "adv"), ("proudly", "adv"),
    ("quietly", "adv"), ("suddenly", "adv"), ("carefully", "adv"),
    ("heavy", "adj"), ("quiet", "adj"), ("clever", "adj"), ("rusty", "adj"),
    ("golden", "adj"), ("narrow", "adj"), ("gentle", "adj"),
    ("crooked", "adj"), ("shiny", "adj"), ("fierce", "adj"),
    ("old", "adj"), ("young", "adj"), ("tired", "adj"), ("busy", "adj"),
]
