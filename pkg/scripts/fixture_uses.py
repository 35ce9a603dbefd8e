"""The 138-use fixture table behind the replay fixtures.

Three uses per catalog domain, numbered in catalog order. Each row:
(purpose, capability, ai_user, ai_subject, realisticness, justification,
tier, act_location, risk_note). realisticness: ae/up/un. tier: P/H/L.
act_location is required for P/H. risk_note, when set, overrides the
generated reasoning fragment.
"""

A5A = "Article 5(1)(a)"
A5B = "Article 5(1)(b)"
A5C = "Article 5(1)(c)"
A5D = "Article 5(1)(d)"
AM51 = "Amendment 51"
AX1 = "Article 6(2) and Annex III, Section 1(a)"
AX2 = "Article 6(2) and Annex III, Section 2"
AX3 = "Article 6(2) and Annex III, Section 3"
AX4 = "Article 6(2) and Annex III, Section 4"
AX5 = "Article 6(2) and Annex III, Section 5"
AX6 = "Article 6(2) and Annex III, Section 6"
AX7 = "Article 6(2) and Annex III, Section 7"
AX8 = "Article 6(2) and Annex III, Section 8"

# domain name -> list of three rows
USE_TABLE = [
    ("Biometric identification and categorization of natural persons", [
        ("Secure access control",
         "Verify enrolled faces at entry points to grant or deny access",
         "Facility operators, security firms", "Employees and visitors",
         "ae", "One of the longest-established deployments of the technology.",
         "H", AX1, "the use of biometric identification to control physical access"),
        ("Age bracket estimation for age-gated services",
         "Estimate age bands from facial structure at points of sale",
         "Retailers, online platforms", "Customers",
         "ae", "Age-estimation gates are already in commercial trials at retail and online checkouts.",
         "H", AX1, "the biometric categorisation of natural persons by age"),
        ("Identity record de-duplication",
         "Match faces across enrollment databases to expose duplicate identities",
         "Government registries", "Citizens",
         "ae", "Deduplication against face databases is routine in large identity programmes.",
         "H", AX1, "large-scale biometric matching across identity databases"),
    ]),
    ("Family", [
        ("Steering children's viewing habits",
         "Adapt streamed content in real time to children's emotional reactions to extend watch time",
         "Streaming platforms, parental-app vendors", "Children",
         "up", "Emotion-adaptive children's media has been prototyped, but safeguarding concerns block deployment.",
         "P", A5B, "exploiting the vulnerabilities of children to materially distort their behaviour"),
        ("Family photo organization",
         "Group family albums by recognizing household members",
         "Consumer photo services", "Family members",
         "ae", "Shipping for years in mainstream photo products.",
         "L", None, None),
        ("Elderly care assistance",
         "Recognize signs of distress or confusion and alert caregivers",
         "Care providers, families", "Elderly relatives",
         "up", "Pilots exist in assisted-living settings, but reliability and consent questions remain open.",
         "L", None, None),
    ]),
    ("Romantic relationships and friendships", [
        ("Dating profile verification",
         "Match profile photos against live selfie checks to block impersonation",
         "Dating platforms", "Platform users",
         "ae", "Several large dating apps already run photo verification.",
         "L", None, None),
        ("Shared-memory curation for couples",
         "Assemble joint photo timelines by recognizing both partners",
         "Consumer photo services", "Couples",
         "ae", "Mainstream photo products already build person-keyed shared albums.",
         "L", None, None),
        ("Friend-group event albums",
         "Distribute event photos to the friends recognized in them",
         "Social apps", "Friend groups",
         "ae", "Face-based photo sharing is available in consumer apps today.",
         "L", None, None),
    ]),
    ("Health and Healthcare", [
        ("Verify patient identity in medical settings",
         "Match patient faces to health records at admission and medication rounds",
         "Hospitals, clinics", "Patients",
         "ae", "Hospital systems already trial face checks to prevent record mix-ups.",
         "L", None, None),
        ("Emergency room intake prioritization",
         "Recognize registered high-risk patients on arrival to speed up triage",
         "Hospitals", "Patients",
         "up", "Triage support is under discussion but not established clinical practice.",
         "H", AX5, "use in dispatching and prioritising emergency health services"),
        ("Support for disease detection",
         "Analyse facial markers that correlate with genetic and neurological conditions",
         "Healthcare providers", "Patients",
         "up", "Has the potential to support diagnostics, yet clinical validation and trust are unresolved.",
         "H", AX5, "influence over access to essential healthcare services"),
    ]),
    ("Well-being", [
        ("Mood self-tracking",
         "Estimate daily mood from selfie check-ins for personal journaling",
         "Wellness app vendors", "App users",
         "ae", "Mood-logging apps with camera check-ins are on the market.",
         "L", None, None),
        ("Stress feedback during meditation",
         "Read facial tension cues to adapt guided relaxation sessions",
         "Wellness app vendors", "App users",
         "ae", "Camera-guided relaxation features already ship in wellness apps.",
         "L", None, None),
        ("Fatigue-aware break reminders",
         "Detect tiredness in front of a workstation and suggest breaks",
         "Employers, wellness vendors", "Office workers",
         "up", "Prototyped in workplace-wellness pilots, rarely deployed.",
         "L", None, None),
    ]),
    ("Human-Computer Interaction", [
        ("Attention-adaptive workplace software",
         "Track where users look and how they react to adapt interface layouts",
         "Software vendors, employers", "Office workers",
         "up", "Research systems exist; workplace monitoring rules complicate rollout.",
         "H", AX4, "monitoring and evaluating worker attention and behaviour"),
        ("Hands-free device control",
         "Map facial gestures to interface commands for device control",
         "Device manufacturers", "Device users",
         "ae", "Gesture and expression control ships in accessibility toolkits.",
         "L", None, None),
        ("Avatar expression mirroring",
         "Animate virtual avatars from users' live facial expressions",
         "Platform vendors", "Platform users",
         "ae", "Standard in current video-chat and VR products.",
         "L", None, None),
    ]),
    ("Finance and Investment", [
        ("Verify customer identity during transactions",
         "Match the account holder's face before authorising payments at banks",
         "Banks", "Banking customers",
         "ae", "Face-verified payments and logins are live in retail banking.",
         "L", None, None),
        ("Creditworthiness interview scoring",
         "Score loan applicants' recorded interviews for credibility cues",
         "Lenders", "Loan applicants",
         "up", "Marketed by a few vendors while regulators and scientists dispute its validity.",
         "H", AX5, "evaluating the creditworthiness of natural persons"),
        ("Branch watchlist alerts",
         "Flag faces matching known fraudsters when they enter branches",
         "Banks, security firms", "Branch visitors",
         "ae", "Watchlist screening is already sold for branch security.",
         "H", AX1, "remote biometric identification of visitors against watchlists"),
    ]),
    ("Education and vocational training", [
        ("Student attendance tracking",
         "Identify students' faces and match them with an enrollment database",
         "Schools", "Students",
         "ae", "Deployed in several school systems, though contested on privacy grounds.",
         "H", AX3, "monitoring of students within educational institutions"),
        ("Remote exam proctoring",
         "Verify the test taker's identity and flag off-screen behaviour during online exams",
         "Universities, testing services", "Students",
         "ae", "Widely used by online examination platforms.",
         "H", AX3, "use in evaluating participants in tests and controlling exam access"),
        ("Engagement-adaptive tutoring",
         "Adjust lesson pacing when learners look confused or disengaged",
         "Education software vendors", "Students",
         "up", "Affect-aware tutoring remains a research prototype.",
         "H", AX3, "evaluation of learning behaviour that can steer educational outcomes"),
    ]),
    ("Employment, workers management and access to self-employment", [
        ("Screening recorded job interviews",
         "Rank candidates using facial cues extracted from video interviews",
         "Employers, HR platforms", "Job applicants",
         "ae", "Commercial video-interview scoring exists and is heavily criticised.",
         "H", AX4, "use in recruitment and selection of natural persons"),
        ("Workplace attendance and timekeeping",
         "Clock workers in and out by recognizing their faces at site entrances",
         "Employers", "Workers",
         "ae", "Face-based time clocks are common in shift-based industries.",
         "H", AX4, "monitoring of workers' presence and behaviour"),
        ("Validate remote worker identity online",
         "Confirm that the contracted person is the one attending remote shifts",
         "Employers, gig platforms", "Remote workers",
         "ae", "Remote-work identity checks are in production at gig platforms.",
         "H", AX4, "verification tied to task allocation and performance monitoring"),
    ]),
    ("Essential private services and public services and benefits", [
        ("Social scoring for benefit access",
         "Aggregate face-linked behaviour records into a trustworthiness score that gates services",
         "Public authorities", "Citizens",
         "up", "Discussed in policy circles; no EU deployment is plausible under current law.",
         "P", A5C, "social scoring by public authorities leading to detrimental treatment"),
        ("Benefit claimant verification",
         "Match claimants' faces to case files at service counters",
         "Welfare agencies", "Benefit claimants",
         "ae", "Identity checks at benefit offices already use biometric kiosks in some countries.",
         "H", AX5, "evaluating eligibility and access to public assistance benefits"),
        ("Emergency dispatch caller identification",
         "Identify distressed callers on video lines to speed up response",
         "Emergency services", "Callers",
         "up", "Video emergency lines are being trialled in a few regions.",
         "H", AX5, "use in dispatching emergency first response services"),
    ]),
    ("Recommender Systems and Personalization", [
        ("Demographic-targeted content gating",
         "Estimate viewer age from a camera to gate and rank recommendations",
         "Streaming platforms", "Viewers",
         "up", "Camera-based audience gating is prototyped for shared screens.",
         "H", AX1, "biometric categorisation of viewers to filter content"),
        ("Returning-visitor personalization",
         "Recognize opted-in visitors to restore their preferences on shared devices",
         "Hospitality and retail operators", "Opted-in customers",
         "ae", "Hotel and retail pilots already restore profiles on recognition.",
         "L", None, None),
        ("Minor-safe recommendation filtering",
         "Detect child viewers in front of shared screens and restrict recommendations",
         "Streaming platforms", "Children",
         "up", "Child-detection filtering is announced in family-TV prototypes.",
         "H", AX1, "biometric categorisation of children for content decisions"),
    ]),
    ("Social Media", [
        ("Building face search databases from public posts",
         "Scrape profile photos at scale into a searchable identification index",
         "Data brokers, search vendors", "Social media users",
         "ae", "Commercial face-search engines built from scraped photos already exist.",
         "P", AM51, "the indiscriminate scraping of biometric data from social media to build recognition databases"),
        ("Automatic friend tagging",
         "Suggest tags by recognizing friends in uploaded photos",
         "Social platforms", "Platform users",
         "ae", "A long-standing (and repeatedly litigated) platform feature.",
         "L", None, None),
        ("Impersonation account detection",
         "Flag new profiles whose photos reuse another person's face",
         "Social platforms", "Platform users",
         "ae", "Platforms already run face comparison to catch cloned profiles.",
         "L", None, None),
    ]),
    ("Sports and Recreation", [
        ("Stadium entry screening",
         "Match ticket holders' faces at turnstiles and screen against banned-fan lists",
         "Stadium operators, leagues", "Spectators",
         "ae", "Face-entry pilots run at major stadiums despite protests.",
         "H", AX1, "remote biometric identification of spectators in publicly accessible venues"),
        ("Athlete workload monitoring",
         "Track exertion and fatigue from athletes' faces during training",
         "Professional clubs", "Athletes",
         "ae", "Elite clubs already run camera-based load monitoring in training halls.",
         "H", AX4, "monitoring and evaluating the performance of employed athletes"),
        ("Personal best photo retrieval",
         "Find all race photos of a participant from their bib-linked selfie",
         "Event photography services", "Race participants",
         "ae", "Standard offering at mass-participation races.",
         "L", None, None),
    ]),
    ("Arts and Entertainment", [
        ("Interactive museum exhibits",
         "Let installations respond to visitors' expressions and dwell time",
         "Museums, studios", "Visitors",
         "ae", "Expression-reactive installations tour galleries today.",
         "L", None, None),
        ("Casting archive search",
         "Search audition archives for actors resembling a desired look",
         "Casting agencies", "Actors",
         "up", "Archive face search is being evaluated by production houses.",
         "H", AX4, "screening that conditions access to acting work"),
        ("Audience reaction testing",
         "Aggregate anonymous expression signals from test screenings",
         "Film studios", "Test audiences",
         "ae", "Reaction measurement is an established screening-room service.",
         "L", None, None),
    ]),
    ("Security and Cybersecurity", [
        ("Surveillance",
         "Identifying individuals in surveillance footage",
         "Law Enforcement, Security Companies", "General Public",
         "ae", "Public-space face surveillance is deployed in several jurisdictions.",
         "P", A5D, None),
        ("Perimeter watchlist alerts",
         "Alert guards when faces on a threat watchlist approach a protected site",
         "Critical site operators", "Approaching individuals",
         "ae", "Perimeter face alerts ship in physical-security suites.",
         "H", AX1, "remote biometric identification against security watchlists"),
        ("Device and application unlocking",
         "Authenticate the owner's face to unlock devices and apps",
         "Device manufacturers", "Device owners",
         "ae", "The single most familiar consumer application.",
         "L", None, None),
    ]),
    ("Marketing and Advertising", [
        ("Subliminal ad steering",
         "Adapt advertising imperceptibly to viewers' micro-expressions to push purchases",
         "Ad-tech vendors", "Shoppers",
         "up", "Emotion-targeted ad tech is marketed, though covert adaptation crosses legal lines.",
         "P", A5A, "subliminal techniques that materially distort consumer behaviour"),
        ("Billboard audience measurement",
         "Count and segment passers-by looking at digital billboards",
         "Out-of-home ad networks", "Passers-by",
         "ae", "Camera-equipped billboards already report audience figures.",
         "L", None, None),
        ("Opt-in ad recall studies",
         "Measure recruited panelists' reactions to ad variants",
         "Market research firms", "Panelists",
         "ae", "A routine consented market-research method.",
         "L", None, None),
    ]),
    ("Agriculture and Farming", [
        ("Livestock face identification",
         "Tell individual cows and pigs apart by their faces for health records",
         "Farms, agri-tech vendors", "Livestock (managed by farmers)",
         "un", "Animal biometrics exists, but as an application of this technology for people it is a category error.",
         "L", None, None),
        ("Detecting plant diseases and pest infestations",
         "Scan crop leaves with face-matching models to spot infestations",
         "Farm cooperatives", "Farmers",
         "un", "Does not employ the capabilities of facial recognition; plant pathology needs different models.",
         "L", None, None),
        ("Farmhand mood-based task rotation",
         "Rotate field tasks according to workers' daily facial mood scans",
         "Farm operators", "Farm workers",
         "un", "Mood-scanned task rotation lacks practicality and any evidence of value.",
         "L", None, None),
    ]),
    ("Entrepreneurship", [
        ("Recognize customers, tailor services",
         "Recognize returning customers so staff can greet and serve them personally",
         "Small businesses", "Customers",
         "ae", "Boutique retail pilots greet recognized regulars today.",
         "L", None, None),
        ("Founder identity verification for registrations",
         "Verify founders' faces against identity documents when registering companies",
         "Business registries, fintech onboarding services", "Founders",
         "ae", "Remote company onboarding already uses document-face matching.",
         "H", AX5, "gating access to an essential registration service"),
        ("Co-working space access",
         "Admit members to shared offices by face instead of key cards",
         "Co-working operators", "Members",
         "ae", "Face-entry co-working doors are commercially available.",
         "L", None, None),
    ]),
    ("Autonomous Robots and Robotics", [
        ("Authorized operator gating for industrial robots",
         "Run hazardous machines only when a certified operator's face is present",
         "Manufacturers, plant operators", "Machine operators",
         "up", "Safety interlocks keyed to operator identity are in industrial pilots.",
         "H", AX2, "a safety component controlling dangerous machinery"),
        ("Collision avoidance around people",
         "Identify obstacles and people so mobile robots avoid collisions",
         "Robot vendors, warehouses", "Bystanders",
         "ae", "Person detection for navigation is standard in mobile robotics.",
         "L", None, None),
        ("Household member recognition by home robots",
         "Let assistive robots address household members by name",
         "Consumer robot vendors", "Household members",
         "ae", "Consumer robots and smart displays already offer face profiles.",
         "L", None, None),
    ]),
    ("Innovation and Research", [
        ("Study participant check-in",
         "Verify enrolled participants across longitudinal study sessions",
         "Research institutions", "Study participants",
         "ae", "Longitudinal studies use biometric check-in to keep cohorts consistent.",
         "L", None, None),
        ("Benchmark dataset curation",
         "Cluster and label face datasets used to evaluate recognition models",
         "Research labs", "Dataset subjects",
         "ae", "Dataset curation pipelines are core research infrastructure.",
         "L", None, None),
        ("Using diverse facial data to refine algorithms",
         "Expand training corpora across demographics to reduce error-rate gaps",
         "Research labs, vendors", "Dataset subjects",
         "ae", "Demographic-balance work is an active and published engineering practice.",
         "L", None, None),
    ]),
    ("Management and Operation of critical infrastructure", [
        ("Control-room access control",
         "Restrict grid and plant control rooms to cleared operators",
         "Utility operators", "Operators",
         "ae", "Control-room biometric locks are standard practice.",
         "H", AX2, "gating the operation of critical infrastructure"),
        ("Shift handover verification",
         "Confirm the identity of incoming shift operators before transferring control",
         "Utility operators", "Operators",
         "up", "Formal face-verified handover is being piloted at large plants.",
         "H", AX2, "a safety-relevant control in infrastructure operation"),
        ("Contractor escorting compliance",
         "Check that visiting contractors stay with their badged escorts on site",
         "Infrastructure operators", "Contractors",
         "up", "Escort-tracking analytics are an emerging site-security feature.",
         "H", AX2, "monitoring within critical infrastructure sites"),
    ]),
    ("Law enforcement", [
        ("Live public space scanning",
         "Scan street camera feeds in real time for wanted individuals",
         "Police forces", "General public",
         "ae", "Real-time street recognition has been field-tested by several forces.",
         "P", A5D, None),
        ("Mugshot matching in investigations",
         "Compare crime-scene stills against custody photo databases",
         "Police forces", "Suspects",
         "ae", "Retrospective mugshot search is widespread police practice.",
         "H", AX6, "evaluating evidence and identifying suspects in criminal investigations"),
        ("Crime scene footage analysis",
         "Extract and group faces from seized footage to map who was present",
         "Police forces", "Persons of interest",
         "ae", "Footage triage tools are sold to investigative units.",
         "H", AX6, "profiling of natural persons in the course of investigations"),
    ]),
    ("Migration, Asylum and Border control management", [
        ("Automated border e-gates",
         "Match travellers' faces to passport chips for automated crossing",
         "Border agencies", "Travellers",
         "ae", "E-gates are installed at most international airports.",
         "H", AX7, "verification of travel documents at borders"),
        ("Identify watchlisted individuals at borders",
         "Screen arriving travellers against security watchlists",
         "Border agencies", "Travellers",
         "ae", "Watchlist screening is integral to border management systems.",
         "H", AX7, "security risk assessment of persons entering a Member State"),
        ("Verify asylum seeker identities",
         "Anchor asylum case files to applicants' biometric identity",
         "Migration authorities", "Asylum seekers",
         "ae", "Biometric registration of asylum applicants is established EU practice.",
         "H", AX7, "examining applications for asylum and residence"),
    ]),
    ("Democracy", [
        ("Prevent voter fraud via identity verification",
         "Verify voters' identities at polling stations against the electoral roll",
         "Election authorities", "Voters",
         "up", "Trialled in a few countries; accuracy and exclusion worries persist.",
         "H", AX8, "influence over participation in democratic processes"),
        ("Civic trustworthiness scoring",
         "Score citizens' public behaviour to gate access to participatory programmes",
         "Public authorities", "Citizens",
         "up", "Operational analogues exist outside the EU; inside it the idea survives only as policy debate.",
         "P", A5C, "social scoring by public authorities"),
        ("Public meeting attendance statistics",
         "Produce anonymous attendance and demographic statistics for town halls",
         "Municipalities", "Attendees",
         "up", "Municipal analytics pilots exist with aggregate-only reporting.",
         "L", None, None),
    ]),
    ("Media and Communication", [
        ("Archive footage person indexing",
         "Index decades of news footage by the public figures appearing in it",
         "Broadcasters, archives", "Public figures",
         "ae", "Media archives already run face indexing for retrieval.",
         "H", AX1, "post remote biometric identification across broadcast archives"),
        ("Automatic bystander blurring",
         "Blur the faces of bystanders in published footage to protect privacy",
         "Newsrooms, platforms", "Bystanders",
         "ae", "Automated blurring is built into modern editing tools.",
         "L", None, None),
        ("Presenter teleprompter personalization",
         "Load each presenter's scripts and camera presets on recognition",
         "Studios", "Presenters",
         "ae", "Face-keyed presets are available in current studio automation.",
         "L", None, None),
    ]),
    ("Accessibility and Inclusion", [
        ("Companion identification for blind users",
         "Announce the names of approaching acquaintances through a wearable",
         "Assistive tech vendors", "Blind and low-vision users",
         "up", "Wearable prototypes exist; battery and consent issues are unresolved.",
         "H", AX1, "identification of third parties who never opted in"),
        ("Facilitating non-verbal communication",
         "Interpret facial expressions and gestures so non-verbal individuals can be understood",
         "Assistive tech vendors", "Non-verbal individuals",
         "up", "Expression-to-speech research is promising but still experimental.",
         "L", None, None),
        ("Speaker-aware captioning",
         "Attribute live captions to the person speaking in group calls",
         "Communication platforms", "Deaf and hard-of-hearing users",
         "ae", "Speaker attribution ships in mainstream conferencing captions.",
         "L", None, None),
    ]),
    ("Energy", [
        ("Grid control-room operator verification",
         "Keep transmission control seats locked to certified operators",
         "Grid operators", "Operators",
         "ae", "Operator verification is part of grid-security baselines.",
         "H", AX2, "a control point in electricity supply operation"),
        ("Authenticate energy facility personnel access",
         "Admit only cleared staff into substations and generation sites",
         "Energy companies", "Site staff",
         "ae", "Substation biometric locks are already procured at scale.",
         "H", AX2, "access control across energy infrastructure"),
        ("Household energy coaching displays",
         "Show each recognized household member their personal consumption tips",
         "Smart-meter vendors", "Household members",
         "up", "Personalized in-home energy displays are an announced product direction.",
         "L", None, None),
    ]),
    ("Military and Defense", [
        ("Base access control",
         "Verify personnel identity at military installation gates",
         "Armed forces", "Personnel",
         "ae", "Biometric gate control is standard on modern bases.",
         "H", AX1, "biometric identification at defence installations"),
        ("Verify military personnel identities",
         "Confirm identities of deployed personnel across units and systems",
         "Armed forces", "Personnel",
         "ae", "Theatre identity systems routinely use face biometrics.",
         "H", AX1, "large-scale biometric verification of personnel"),
        ("Identify threats in crowds by military",
         "Screen crowds near deployments for persons on threat lists",
         "Military police", "Civilians near deployments",
         "up", "Crowd screening kits are marketed to defence buyers; field use is contested.",
         "H", AX1, "remote biometric identification of civilians in public spaces"),
    ]),
    ("Administration of justice and democratic processes", [
        ("Assisting criminal investigations by identifying suspects in video footage",
         "Identify suspects in seized video footage to support investigations",
         "Law enforcement agencies", "Suspects",
         "ae", "Retrospective suspect identification is in active investigative use.",
         "H", AX6,
         "the use of post remote biometric identification to support criminal investigations; "
         "the identification is not performed in real time, so it does not fall under the "
         "Article 5(1)(d) prohibition, but it remains a high-risk law-enforcement use"),
        ("Courtroom identity verification",
         "Verify the identity of defendants and witnesses at hearings",
         "Courts", "Defendants and witnesses",
         "up", "Courtroom biometrics are proposed in digital-justice programmes.",
         "H", AX8, "assisting judicial authorities in administering proceedings"),
        ("Parole check-in verification",
         "Let parolees check in remotely with face-verified attestations",
         "Probation services", "Parolees",
         "ae", "Remote supervision apps with face check-ins are already procured.",
         "H", AX6, "individual risk management of persons under supervision"),
    ]),
    ("Government Services and Administration", [
        ("Identify citizens for personalized services",
         "Recognize citizens at service desks to pull up their files instantly",
         "Government agencies", "Citizens",
         "up", "One-stop government desks are piloting biometric lookups.",
         "H", AX5, "conditioning access to public services on biometric lookup"),
        ("Benefits office queue verification",
         "Verify identity while queueing to pre-load case files",
         "Welfare agencies", "Claimants",
         "up", "Queue pre-verification is being trialled at service centres.",
         "H", AX5, "access management for public assistance services"),
        ("Multilingual kiosk personalization",
         "Switch kiosk language and accessibility settings for recognized users",
         "Municipal service centers", "Residents",
         "up", "Kiosk personalization is an announced smart-city feature.",
         "L", None, None),
    ]),
    ("Diplomacy and Foreign Policy", [
        ("Secure embassies by identifying visitors",
         "Screen embassy visitors against appointment and threat lists",
         "Foreign ministries", "Visitors",
         "ae", "Embassy visitor screening systems are operational worldwide.",
         "H", AX7, "security screening of visa applicants and visitors"),
        ("Summit delegate badging",
         "Issue and verify delegate credentials by face at summits",
         "Host governments", "Delegates",
         "ae", "Major summits have used biometric accreditation for years.",
         "L", None, None),
        ("State visit archive indexing",
         "Index official photo archives by the dignitaries present",
         "Foreign ministries", "Dignitaries",
         "ae", "Protocol offices already index archives this way.",
         "L", None, None),
    ]),
    ("Food Safety and Regulation", [
        ("Hygiene zone staff verification",
         "Ensure only certified staff enter high-care food production zones",
         "Food manufacturers", "Production staff",
         "ae", "Hygiene-zone access control is standard in food plants.",
         "H", AX4, "monitoring workers' access to controlled production areas"),
        ("Diner allergy risk detection",
         "Predict diners' allergic reactions from their faces at restaurant entrances",
         "Restaurant chains", "Diners",
         "un", "Allergies leave no facial signature; the premise is incoherent.",
         "L", None, None),
        ("Canteen payment by face",
         "Charge staff canteen meals to recognized employee accounts",
         "Catering operators", "Employees",
         "ae", "Face-pay canteens operate in several corporate campuses.",
         "L", None, None),
    ]),
    ("Crisis Management and Emergency Response", [
        ("Locating missing persons in disaster zones",
         "Match found individuals against missing-person reports after disasters",
         "Civil protection agencies", "Disaster victims",
         "ae", "Post-disaster reunification systems already use face matching.",
         "H", AX5, "prioritising emergency response and family reunification"),
        ("Authenticate emergency responders' identities",
         "Verify responders' identities at cordons so only authorized crews pass",
         "Incident commanders", "Responders",
         "up", "Cordon identity checks are being piloted in large-scale exercises.",
         "H", AX5, "controlling access during emergency response operations"),
        ("Shelter intake registration",
         "Register evacuees at shelters and flag unaccompanied minors",
         "Relief agencies", "Evacuees",
         "up", "Biometric shelter registration is under evaluation by relief bodies.",
         "H", AX5, "eligibility and safeguarding decisions for evacuees"),
    ]),
    ("Humanitarian Aid", [
        ("Aid distribution identity verification",
         "Tie ration entitlements to refugees' biometric identities",
         "Aid organizations", "Aid recipients",
         "ae", "Biometric ration systems are deployed in major aid programmes.",
         "H", AX5, "gating access to essential assistance"),
        ("Family reunification matching",
         "Match photos of separated family members across camp registries",
         "Aid organizations", "Displaced families",
         "ae", "Reunification registries already run photo matching.",
         "H", AX7, "processing of displaced persons' identities across borders"),
        ("Volunteer credentialing",
         "Verify field volunteers' identities when issuing site passes",
         "NGOs", "Volunteers",
         "ae", "Field badging systems with face checks are in use at large NGOs.",
         "L", None, None),
    ]),
    ("Transport and Logistics", [
        ("Port worker zone authorization",
         "Restrict container terminal zones to badged, recognized workers",
         "Port operators", "Port workers",
         "ae", "Terminal access biometrics are in production at large ports.",
         "H", AX2, "access control in transport infrastructure operation"),
        ("Verify cargo access by authorized personnel",
         "Identify personnel handling cargo to improve chain-of-custody efficiency",
         "Logistics companies", "Warehouse personnel",
         "ae", "Cargo-handling identity checks are routine in high-value logistics.",
         "L", None, None),
        ("Fleet driver clock-in",
         "Confirm the rostered driver is behind the wheel at shift start",
         "Fleet operators", "Drivers",
         "ae", "Driver-facing cameras with identity checks ship in fleet telematics.",
         "H", AX4, "monitoring which worker performs assigned driving tasks"),
    ]),
    ("Urban Planning", [
        ("Pedestrian flow studies",
         "Estimate anonymized footfall patterns from street cameras for planning",
         "City planning departments", "Pedestrians",
         "ae", "Footfall analytics are standard planning inputs.",
         "L", None, None),
        ("Public space usage surveys",
         "Measure how long different demographic groups linger in renovated plazas",
         "Municipalities", "Residents",
         "ae", "Analytics vendors already sell demographic dwell-time surveys to cities.",
         "L", None, None),
        ("Control access to restricted urban areas",
         "Admit residents and permit holders into limited-traffic zones",
         "City authorities", "Residents and visitors",
         "up", "Camera-enforced restricted zones are moving from plates to faces in pilots.",
         "H", AX1, "biometric identification controlling movement in urban space"),
    ]),
    ("Counterterrorism", [
        ("Real-time crowd screening at public events",
         "Scan event crowds live against terror watchlists",
         "Security agencies", "Event attendees",
         "ae", "Live crowd screening has been deployed at large events.",
         "P", A5D, None),
        ("Border watchlist cross-checking",
         "Cross-check travellers against multinational terror watchlists",
         "Border and security agencies", "Travellers",
         "ae", "Cross-border watchlist checks are embedded in screening systems.",
         "H", AX6, "risk assessment of individuals for serious offences"),
        ("Post-incident footage triage",
         "Rapidly identify persons present across hours of incident footage",
         "Security agencies", "Persons of interest",
         "ae", "Footage triage is a core capability of investigation suites.",
         "H", AX6, "evaluating evidence after security incidents"),
    ]),
    ("Environment and Sustainability", [
        ("Wildlife poacher deterrence by animal face ID",
         "Identify individual protected animals by their faces to track herds",
         "Conservation agencies", "Wildlife (managed by rangers)",
         "un", "Animal re-identification is real research, but it is not a use of human facial recognition.",
         "L", None, None),
        ("Recycling reward kiosks",
         "Pay recycling rewards to residents recognized at deposit kiosks",
         "Municipal waste programs", "Residents",
         "un", "A card or app solves this better; face payout kiosks add risk for no value.",
         "L", None, None),
        ("Verify access to protected environmental areas",
         "Check permits of visitors entering protected reserves",
         "Park authorities", "Visitors",
         "up", "Permit-by-face entry is being piloted at a few heavily regulated reserves.",
         "L", None, None),
    ]),
    ("International Law Enforcement and Cooperation", [
        ("Cross-border fugitive identification",
         "Match fugitives across member states' databases under mutual assistance",
         "International police bodies", "Fugitives",
         "ae", "Cross-border biometric queries run under existing cooperation treaties.",
         "H", AX6, "identification of persons sought for serious crimes"),
        ("Shared watchlist federation",
         "Federate national watchlists so border hits propagate between agencies",
         "National agencies", "Watchlisted individuals",
         "up", "Federated biometric watchlists are under active negotiation.",
         "H", AX6, "profiling across jurisdictions"),
        ("Extradition identity confirmation",
         "Confirm that the person surrendered matches the warrant subject",
         "Justice ministries", "Extradited persons",
         "ae", "Identity confirmation is already part of surrender procedures.",
         "H", AX6, "evidence evaluation in extradition proceedings"),
    ]),
    ("Climate Change Mitigation and Adaptation", [
        ("Identify illegal loggers",
         "Match camera-trap images of logging crews against offender records",
         "Environmental enforcement agencies", "Suspected offenders",
         "up", "Camera-trap enforcement is being extended from vehicles to people in pilots.",
         "H", AX6, "identifying suspects of environmental crimes"),
        ("Track the carbon footprint of individuals",
         "Recognize individuals across city cameras to tally their personal emissions",
         "Municipalities", "Residents",
         "un", "Ubiquitous tracking for personal carbon accounting is neither lawful nor practical.",
         "L", None, None),
        ("Verify access to climate-sensitive areas",
         "Check authorizations of crews entering fragile coastal defence zones",
         "Coastal management agencies", "Work crews",
         "up", "Zone-entry verification is proposed for critical adaptation works.",
         "L", None, None),
    ]),
    ("Gaming and interactive experiences", [
        ("Enhancing player immersion",
         "Translating player's facial expressions into game",
         "Game developers, VR platforms", "Gamers",
         "ae", "Expression capture ships in consumer VR titles today.",
         "L", None, None),
        ("Age verification for mature games",
         "Estimate players' age before unlocking mature-rated content",
         "Game platforms", "Players",
         "ae", "Large platforms already run face age estimation at sign-up.",
         "H", AX1, "biometric age categorisation of players"),
        ("Spectator highlight reels",
         "Cut esports crowd reactions into broadcast highlight reels",
         "Esports broadcasters", "Spectators",
         "ae", "Crowd-reaction cams are a broadcast staple.",
         "L", None, None),
    ]),
    ("Hobbies", [
        ("Photography club photo curation",
         "Sort club outings' photos by which members appear in them",
         "Hobby clubs", "Club members",
         "ae", "Consumer tools already make this trivial for clubs.",
         "L", None, None),
        ("Craft authenticity by maker's expression",
         "Authenticate handmade goods by analyzing the maker's facial expression during crafting",
         "Craft marketplaces", "Artisans",
         "un", "Expression during crafting proves nothing about authenticity; the idea is incoherent.",
         "L", None, None),
        ("Hobby fair entry passes",
         "Admit pre-registered visitors to fairs by face instead of tickets",
         "Fair organizers", "Visitors",
         "ae", "Larger conventions already offer ticketless face entry lanes.",
         "L", None, None),
    ]),
    ("Smart home", [
        ("Monitoring child safety",
         "Alerting when unrecognized faces are detected",
         "Parents, security companies", "Children",
         "ae", "Unknown-face alerts are a stock feature of home cameras.",
         "H", AX1, None),
        ("Personalized home automation",
         "Set lighting, climate and media to the recognized resident's preferences",
         "Smart-home vendors", "Residents",
         "ae", "Face-keyed scenes ship in current smart displays.",
         "L", None, None),
        ("Delivery person logging",
         "Log couriers at the door and release parcel lockers to expected ones",
         "Smart-lock vendors", "Couriers",
         "ae", "Doorbell cameras already recognize frequent couriers; locker release is the shipping extension.",
         "L", None, None),
    ]),
    ("Social and Community Services", [
        ("Caseworker client verification",
         "Verify clients' identities across visits to keep case files consistent",
         "Social service agencies", "Clients",
         "up", "Client verification is being piloted in casework systems.",
         "H", AX5, "access decisions for essential social services"),
        ("Community center membership entry",
         "Admit members to community facilities without cards",
         "Community centers", "Members",
         "ae", "Membership face entry is available in leisure-facility systems.",
         "L", None, None),
        ("Youth program attendance tracking",
         "Track minors' attendance at after-school programs for guardians",
         "Youth organizations", "Minors",
         "up", "Guardian-facing attendance apps are trialling face check-in.",
         "H", AX3, "monitoring of minors in an educational setting"),
    ]),
    ("Public and private transportation", [
        ("Real-time passenger scanning for law enforcement",
         "Scan transit passengers live against wanted lists at station gates",
         "Transit police", "Passengers",
         "ae", "Transit face-scanning trials have run in several metros.",
         "P", A5D, "real-time remote biometric identification of passengers in publicly accessible transit spaces"),
        ("Improving driver safety by detecting driver fatigue",
         "Detect driver fatigue through facial analysis and trigger alerts",
         "Fleet operators, automakers", "Drivers",
         "ae", "Driver-monitoring cameras are mandated in new EU vehicles.",
         "H", AX2, "a safety component in road traffic operation"),
        ("Ride-hailing mutual verification",
         "Let riders and drivers confirm each other's identity before departure",
         "Ride-hailing platforms", "Riders and drivers",
         "ae", "Driver selfie checks are already enforced by major platforms.",
         "L", None, None),
    ]),
    ("Interpersonal Communication", [
        ("Covert conversational emotion steering",
         "Nudge video-call counterparts by imperceptibly amplifying persuasive cues",
         "Communication platform vendors", "Call participants",
         "up", "Persuasion-amplifying filters are an active research topic, though any covert deployment crosses legal lines.",
         "P", A5A, "subliminal techniques distorting interlocutors' behaviour"),
        ("Expression-based call reactions",
         "Trigger on-screen reactions from participants' smiles and nods",
         "Communication platforms", "Call participants",
         "ae", "Gesture-triggered reactions ship in mainstream video calls.",
         "L", None, None),
        ("Video caller identity confirmation",
         "Confirm that a video caller's face matches the claimed family contact",
         "Communication platforms", "Families",
         "up", "Anti-impersonation call checks are emerging in response to deepfake scams.",
         "L", None, None),
    ]),
]
