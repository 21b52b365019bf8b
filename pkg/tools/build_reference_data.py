#!/usr/bin/env python3
"""Regenerate the packaged reference data files.

Writes, under src/socmobility/data/:
  - onet_soc_2019.csv          1,016-entry occupation taxonomy
  - crosswalk_2000_to_2010.csv taxonomy-version mappings (oldest first)
  - crosswalk_2010_to_2019.csv
  - fewshot_examples.txt       the 17-shot prompt example set

The taxonomy combines a curated list of well-known codes/titles (everything
referenced by prompts, shots, crosswalks, or the mock backend) with
structurally plausible filler entries to reach the official 2019 cardinality
of 1,016. Point the pipeline config at the official O*NET file for real use.

Deterministic: no randomness, identical output on every run.
"""

from __future__ import annotations

import csv
from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "socmobility" / "data"
TARGET_COUNT = 1016

# (code, title, description, sample_titles) for the entries the pipeline's
# prompts, mocks, and HIT files rely on.
DESCRIBED = [
    ("11-1011.00", "Chief Executives",
     "Determine and formulate policies and provide overall direction of companies.",
     "CEO|President|Executive Director"),
    ("11-2021.00", "Marketing Managers",
     "Plan, direct, or coordinate marketing policies and programs.",
     "Marketing Director|Brand Manager"),
    ("11-2032.00", "Public Relations Managers",
     "Plan, direct, or coordinate activities designed to create or maintain a favorable public image.",
     "Communications Director|PR Manager"),
    ("11-2033.00", "Fundraising Managers",
     "Plan, direct, or coordinate activities to solicit and maintain funds for special projects or nonprofit organizations.",
     "Development Director|Annual Giving Manager"),
    ("13-2011.00", "Accountants and Auditors",
     "Examine, analyze, and interpret accounting records.",
     "Staff Accountant|Internal Auditor|CPA"),
    ("15-1252.00", "Software Developers",
     "Research, design, and develop computer and network software or specialized utility programs.",
     "Software Engineer|Application Developer"),
    ("15-2051.00", "Data Scientists",
     "Develop and implement a set of techniques or analytics applications to transform raw data into meaningful information.",
     "Data Scientist|Machine Learning Engineer"),
    ("19-4061.00", "Social Science Research Assistants",
     "Assist social scientists in laboratory, survey, and other social science research.",
     "Research Assistant|Survey Specialist"),
    ("25-2031.00", "Secondary School Teachers, Except Special and Career/Technical Education",
     "Teach one or more subjects to students at the secondary school level.",
     "High School Teacher|Math Teacher"),
    ("27-2012.00", "Producers and Directors",
     "Produce or direct stage, television, radio, video, or film productions.",
     "Stage Director|Television Producer"),
    ("29-1141.00", "Registered Nurses",
     "Assess patient health problems and needs, develop and implement nursing care plans.",
     "RN|Staff Nurse|Charge Nurse"),
    ("29-2072.00", "Medical Records Specialists",
     "Compile, process, and maintain medical records of hospital and clinic patients.",
     "Medical Records Clerk|Health Information Specialist"),
    ("29-9021.00", "Health Information Technologists and Medical Registrars",
     "Apply knowledge of healthcare and information systems to assist in the design, development, and continued modification of computerized healthcare systems.",
     "Health Information Technologist|Tumor Registrar"),
    ("35-3023.01", "Baristas",
     "Prepare or serve specialty coffee or other beverages.",
     "Barista|Coffee Bar Attendant"),
    ("41-2031.00", "Retail Salespersons",
     "Sell merchandise, such as furniture, motor vehicles, appliances, or apparel to consumers.",
     "Sales Associate|Retail Clerk"),
    ("47-2111.00", "Electricians",
     "Install, maintain, and repair electrical wiring, equipment, and fixtures.",
     "Journeyman Electrician|Electrical Technician"),
    ("53-3032.00", "Heavy and Tractor-Trailer Truck Drivers",
     "Drive a tractor-trailer combination or a truck with a capacity of at least 26,001 pounds Gross Vehicle Weight.",
     "Truck Driver|CDL Driver"),
    ("53-6032.00", "Aircraft Service Attendants",
     "Service aircraft with fuel, or de-ice, clean, and otherwise prepare aircraft for flight.",
     "Aircraft Cleaner|Ramp Service Agent"),
]

# Curated plain entries: real code/title pairs.
CURATED = [
    ("11-1021.00", "General and Operations Managers"),
    ("11-1031.00", "Legislators"),
    ("11-2011.00", "Advertising and Promotions Managers"),
    ("11-2022.00", "Sales Managers"),
    ("11-3012.00", "Administrative Services Managers"),
    ("11-3021.00", "Computer and Information Systems Managers"),
    ("11-3031.00", "Financial Managers"),
    ("11-3051.00", "Industrial Production Managers"),
    ("11-3061.00", "Purchasing Managers"),
    ("11-3071.00", "Transportation, Storage, and Distribution Managers"),
    ("11-3111.00", "Compensation and Benefits Managers"),
    ("11-3121.00", "Human Resources Managers"),
    ("11-3131.00", "Training and Development Managers"),
    ("11-9013.00", "Farmers, Ranchers, and Other Agricultural Managers"),
    ("11-9021.00", "Construction Managers"),
    ("11-9032.00", "Education Administrators, Kindergarten through Secondary"),
    ("11-9033.00", "Education Administrators, Postsecondary"),
    ("11-9041.00", "Architectural and Engineering Managers"),
    ("11-9051.00", "Food Service Managers"),
    ("11-9081.00", "Lodging Managers"),
    ("11-9111.00", "Medical and Health Services Managers"),
    ("11-9121.00", "Natural Sciences Managers"),
    ("11-9141.00", "Property, Real Estate, and Community Association Managers"),
    ("11-9151.00", "Social and Community Service Managers"),
    ("11-9199.00", "Managers, All Other"),
    ("13-1011.00", "Agents and Business Managers of Artists, Performers, and Athletes"),
    ("13-1028.00", "Buyers and Purchasing Agents"),
    ("13-1031.00", "Claims Adjusters, Examiners, and Investigators"),
    ("13-1041.00", "Compliance Officers"),
    ("13-1051.00", "Cost Estimators"),
    ("13-1071.00", "Human Resources Specialists"),
    ("13-1075.00", "Labor Relations Specialists"),
    ("13-1081.00", "Logisticians"),
    ("13-1082.00", "Project Management Specialists"),
    ("13-1111.00", "Management Analysts"),
    ("13-1121.00", "Meeting, Convention, and Event Planners"),
    ("13-1131.00", "Fundraisers"),
    ("13-1141.00", "Compensation, Benefits, and Job Analysis Specialists"),
    ("13-1151.00", "Training and Development Specialists"),
    ("13-1161.00", "Market Research Analysts and Marketing Specialists"),
    ("13-2031.00", "Budget Analysts"),
    ("13-2041.00", "Credit Analysts"),
    ("13-2051.00", "Financial and Investment Analysts"),
    ("13-2052.00", "Personal Financial Advisors"),
    ("13-2061.00", "Financial Examiners"),
    ("13-2071.00", "Credit Counselors"),
    ("13-2072.00", "Loan Officers"),
    ("13-2081.00", "Tax Examiners and Collectors, and Revenue Agents"),
    ("13-2082.00", "Tax Preparers"),
    ("15-1211.00", "Computer Systems Analysts"),
    ("15-1212.00", "Information Security Analysts"),
    ("15-1221.00", "Computer and Information Research Scientists"),
    ("15-1231.00", "Computer Network Support Specialists"),
    ("15-1232.00", "Computer User Support Specialists"),
    ("15-1241.00", "Computer Network Architects"),
    ("15-1242.00", "Database Administrators"),
    ("15-1243.00", "Database Architects"),
    ("15-1244.00", "Network and Computer Systems Administrators"),
    ("15-1251.00", "Computer Programmers"),
    ("15-1253.00", "Software Quality Assurance Analysts and Testers"),
    ("15-1254.00", "Web Developers"),
    ("15-1255.00", "Web and Digital Interface Designers"),
    ("15-1299.00", "Computer Occupations, All Other"),
    ("15-2011.00", "Actuaries"),
    ("15-2021.00", "Mathematicians"),
    ("15-2031.00", "Operations Research Analysts"),
    ("15-2041.00", "Statisticians"),
    ("17-1011.00", "Architects, Except Landscape and Naval"),
    ("17-1022.00", "Surveyors"),
    ("17-2011.00", "Aerospace Engineers"),
    ("17-2041.00", "Chemical Engineers"),
    ("17-2051.00", "Civil Engineers"),
    ("17-2061.00", "Computer Hardware Engineers"),
    ("17-2071.00", "Electrical Engineers"),
    ("17-2072.00", "Electronics Engineers, Except Computer"),
    ("17-2081.00", "Environmental Engineers"),
    ("17-2112.00", "Industrial Engineers"),
    ("17-2141.00", "Mechanical Engineers"),
    ("17-3011.00", "Architectural and Civil Drafters"),
    ("17-3026.00", "Industrial Engineering Technologists and Technicians"),
    ("19-1013.00", "Soil and Plant Scientists"),
    ("19-1021.00", "Biochemists and Biophysicists"),
    ("19-1042.00", "Medical Scientists, Except Epidemiologists"),
    ("19-2012.00", "Physicists"),
    ("19-2031.00", "Chemists"),
    ("19-2041.00", "Environmental Scientists and Specialists, Including Health"),
    ("19-3011.00", "Economists"),
    ("19-3022.00", "Survey Researchers"),
    ("19-3033.00", "Clinical and Counseling Psychologists"),
    ("19-3034.00", "School Psychologists"),
    ("19-3051.00", "Urban and Regional Planners"),
    ("19-4021.00", "Biological Technicians"),
    ("19-4031.00", "Chemical Technicians"),
    ("21-1012.00", "Educational, Guidance, and Career Counselors and Advisors"),
    ("21-1021.00", "Child, Family, and School Social Workers"),
    ("21-1022.00", "Healthcare Social Workers"),
    ("21-1023.00", "Mental Health and Substance Abuse Social Workers"),
    ("21-1093.00", "Social and Human Service Assistants"),
    ("21-2011.00", "Clergy"),
    ("23-1011.00", "Lawyers"),
    ("23-1023.00", "Judges, Magistrate Judges, and Magistrates"),
    ("23-2011.00", "Paralegals and Legal Assistants"),
    ("23-2093.00", "Title Examiners, Abstractors, and Searchers"),
    ("25-1011.00", "Business Teachers, Postsecondary"),
    ("25-1199.00", "Postsecondary Teachers, All Other"),
    ("25-2011.00", "Preschool Teachers, Except Special Education"),
    ("25-2021.00", "Elementary School Teachers, Except Special Education"),
    ("25-2022.00", "Middle School Teachers, Except Special and Career/Technical Education"),
    ("25-3021.00", "Self-Enrichment Teachers"),
    ("25-4022.00", "Librarians and Media Collections Specialists"),
    ("25-9031.00", "Instructional Coordinators"),
    ("27-1011.00", "Art Directors"),
    ("27-1014.00", "Special Effects Artists and Animators"),
    ("27-1021.00", "Commercial and Industrial Designers"),
    ("27-1022.00", "Fashion Designers"),
    ("27-1023.00", "Floral Designers"),
    ("27-1024.00", "Graphic Designers"),
    ("27-1025.00", "Interior Designers"),
    ("27-2011.00", "Actors"),
    ("27-2021.00", "Athletes and Sports Competitors"),
    ("27-2022.00", "Coaches and Scouts"),
    ("27-2041.00", "Music Directors and Composers"),
    ("27-2042.00", "Musicians and Singers"),
    ("27-3011.00", "Broadcast Announcers and Radio Disc Jockeys"),
    ("27-3023.00", "News Analysts, Reporters, and Journalists"),
    ("27-3031.00", "Public Relations Specialists"),
    ("27-3041.00", "Editors"),
    ("27-3043.00", "Writers and Authors"),
    ("27-4021.00", "Photographers"),
    ("29-1021.00", "Dentists, General"),
    ("29-1031.00", "Dietitians and Nutritionists"),
    ("29-1041.00", "Optometrists"),
    ("29-1051.00", "Pharmacists"),
    ("29-1071.00", "Physician Assistants"),
    ("29-1081.00", "Podiatrists"),
    ("29-1122.00", "Occupational Therapists"),
    ("29-1123.00", "Physical Therapists"),
    ("29-1126.00", "Respiratory Therapists"),
    ("29-1127.00", "Speech-Language Pathologists"),
    ("29-1131.00", "Veterinarians"),
    ("29-1151.00", "Nurse Anesthetists"),
    ("29-1161.00", "Nurse Midwives"),
    ("29-1171.00", "Nurse Practitioners"),
    ("29-1181.00", "Audiologists"),
    ("29-1216.00", "General Internal Medicine Physicians"),
    ("29-2032.00", "Diagnostic Medical Sonographers"),
    ("29-2042.00", "Emergency Medical Technicians"),
    ("29-2043.00", "Paramedics"),
    ("29-2052.00", "Pharmacy Technicians"),
    ("29-2061.00", "Licensed Practical and Licensed Vocational Nurses"),
    ("31-1121.00", "Home Health Aides"),
    ("31-1122.00", "Personal Care Aides"),
    ("31-1131.00", "Nursing Assistants"),
    ("31-1133.00", "Psychiatric Aides"),
    ("31-2021.00", "Physical Therapist Assistants"),
    ("31-9011.00", "Massage Therapists"),
    ("31-9091.00", "Dental Assistants"),
    ("31-9092.00", "Medical Assistants"),
    ("33-1012.00", "First-Line Supervisors of Police and Detectives"),
    ("33-2011.00", "Firefighters"),
    ("33-3012.00", "Correctional Officers and Jailers"),
    ("33-3021.00", "Detectives and Criminal Investigators"),
    ("33-3051.00", "Police and Sheriff's Patrol Officers"),
    ("33-9032.00", "Security Guards"),
    ("35-1012.00", "First-Line Supervisors of Food Preparation and Serving Workers"),
    ("35-2012.00", "Cooks, Institution and Cafeteria"),
    ("35-2014.00", "Cooks, Restaurant"),
    ("35-2021.00", "Food Preparation Workers"),
    ("35-3011.00", "Bartenders"),
    ("35-3023.00", "Fast Food and Counter Workers"),
    ("35-3031.00", "Waiters and Waitresses"),
    ("35-3041.00", "Food Servers, Nonrestaurant"),
    ("35-9011.00", "Dining Room and Cafeteria Attendants and Bartender Helpers"),
    ("37-1011.00", "First-Line Supervisors of Housekeeping and Janitorial Workers"),
    ("37-2011.00", "Janitors and Cleaners, Except Maids and Housekeeping Cleaners"),
    ("37-2012.00", "Maids and Housekeeping Cleaners"),
    ("37-3011.00", "Landscaping and Groundskeeping Workers"),
    ("39-2011.00", "Animal Trainers"),
    ("39-3031.00", "Ushers, Lobby Attendants, and Ticket Takers"),
    ("39-5012.00", "Hairdressers, Hairstylists, and Cosmetologists"),
    ("39-7011.00", "Tour Guides and Escorts"),
    ("39-9011.00", "Childcare Workers"),
    ("39-9031.00", "Exercise Trainers and Group Fitness Instructors"),
    ("39-9032.00", "Recreation Workers"),
    ("41-1011.00", "First-Line Supervisors of Retail Sales Workers"),
    ("41-2011.00", "Cashiers"),
    ("41-3011.00", "Advertising Sales Agents"),
    ("41-3021.00", "Insurance Sales Agents"),
    ("41-3031.00", "Securities, Commodities, and Financial Services Sales Agents"),
    ("41-3091.00", "Sales Representatives of Services, Except Advertising, Insurance, Financial Services, and Travel"),
    ("41-4012.00", "Sales Representatives, Wholesale and Manufacturing, Except Technical and Scientific Products"),
    ("41-9011.00", "Demonstrators and Product Promoters"),
    ("41-9021.00", "Real Estate Brokers"),
    ("41-9022.00", "Real Estate Sales Agents"),
    ("41-9041.00", "Telemarketers"),
    ("43-1011.00", "First-Line Supervisors of Office and Administrative Support Workers"),
    ("43-2011.00", "Switchboard Operators, Including Answering Service"),
    ("43-3011.00", "Bill and Account Collectors"),
    ("43-3031.00", "Bookkeeping, Accounting, and Auditing Clerks"),
    ("43-3051.00", "Payroll and Timekeeping Clerks"),
    ("43-3061.00", "Procurement Clerks"),
    ("43-3071.00", "Tellers"),
    ("43-4031.00", "Court, Municipal, and License Clerks"),
    ("43-4051.00", "Customer Service Representatives"),
    ("43-4061.00", "Eligibility Interviewers, Government Programs"),
    ("43-4081.00", "Hotel, Motel, and Resort Desk Clerks"),
    ("43-4111.00", "Interviewers, Except Eligibility and Loan"),
    ("43-4121.00", "Library Assistants, Clerical"),
    ("43-4131.00", "Loan Interviewers and Clerks"),
    ("43-4141.00", "New Accounts Clerks"),
    ("43-4151.00", "Order Clerks"),
    ("43-4161.00", "Human Resources Assistants, Except Payroll and Timekeeping"),
    ("43-4171.00", "Receptionists and Information Clerks"),
    ("43-5011.00", "Cargo and Freight Agents"),
    ("43-5021.00", "Couriers and Messengers"),
    ("43-5032.00", "Dispatchers, Except Police, Fire, and Ambulance"),
    ("43-5052.00", "Postal Service Mail Carriers"),
    ("43-5061.00", "Production, Planning, and Expediting Clerks"),
    ("43-5071.00", "Shipping, Receiving, and Inventory Clerks"),
    ("43-6011.00", "Executive Secretaries and Executive Administrative Assistants"),
    ("43-6012.00", "Legal Secretaries and Administrative Assistants"),
    ("43-6013.00", "Medical Secretaries and Administrative Assistants"),
    ("43-6014.00", "Secretaries and Administrative Assistants, Except Legal, Medical, and Executive"),
    ("43-9021.00", "Data Entry Keyers"),
    ("43-9022.00", "Word Processors and Typists"),
    ("43-9041.00", "Insurance Claims and Policy Processing Clerks"),
    ("43-9051.00", "Mail Clerks and Mail Machine Operators, Except Postal Service"),
    ("43-9061.00", "Office Clerks, General"),
    ("45-1011.00", "First-Line Supervisors of Farming, Fishing, and Forestry Workers"),
    ("45-2041.00", "Graders and Sorters, Agricultural Products"),
    ("45-2092.00", "Farmworkers and Laborers, Crop, Nursery, and Greenhouse"),
    ("45-4011.00", "Forest and Conservation Workers"),
    ("47-1011.00", "First-Line Supervisors of Construction Trades and Extraction Workers"),
    ("47-2031.00", "Carpenters"),
    ("47-2061.00", "Construction Laborers"),
    ("47-2073.00", "Operating Engineers and Other Construction Equipment Operators"),
    ("47-2141.00", "Painters, Construction and Maintenance"),
    ("47-2152.00", "Plumbers, Pipefitters, and Steamfitters"),
    ("47-2181.00", "Roofers"),
    ("49-1011.00", "First-Line Supervisors of Mechanics, Installers, and Repairers"),
    ("49-2011.00", "Computer, Automated Teller, and Office Machine Repairers"),
    ("49-3011.00", "Aircraft Mechanics and Service Technicians"),
    ("49-3023.00", "Automotive Service Technicians and Mechanics"),
    ("49-9021.00", "Heating, Air Conditioning, and Refrigeration Mechanics and Installers"),
    ("49-9052.00", "Telecommunications Line Installers and Repairers"),
    ("49-9071.00", "Maintenance and Repair Workers, General"),
    ("51-1011.00", "First-Line Supervisors of Production and Operating Workers"),
    ("51-2092.00", "Team Assemblers"),
    ("51-3011.00", "Bakers"),
    ("51-3021.00", "Butchers and Meat Cutters"),
    ("51-4041.00", "Machinists"),
    ("51-4121.00", "Welders, Cutters, Solderers, and Brazers"),
    ("51-6011.00", "Laundry and Dry-Cleaning Workers"),
    ("51-8031.00", "Water and Wastewater Treatment Plant and System Operators"),
    ("51-9061.00", "Inspectors, Testers, Sorters, Samplers, and Weighers"),
    ("51-9111.00", "Packaging and Filling Machine Operators and Tenders"),
    ("53-2011.00", "Airline Pilots, Copilots, and Flight Engineers"),
    ("53-2031.00", "Flight Attendants"),
    ("53-3031.00", "Driver/Sales Workers"),
    ("53-3033.00", "Light Truck Drivers"),
    ("53-3051.00", "Bus Drivers, School"),
    ("53-3052.00", "Bus Drivers, Transit and Intercity"),
    ("53-4011.00", "Locomotive Engineers"),
    ("53-5021.00", "Captains, Mates, and Pilots of Water Vessels"),
    ("53-6021.00", "Parking Attendants"),
    ("53-6031.00", "Automotive and Watercraft Service Attendants"),
    ("53-7051.00", "Industrial Truck and Tractor Operators"),
    ("53-7061.00", "Cleaners of Vehicles and Equipment"),
    ("53-7062.00", "Laborers and Freight, Stock, and Material Movers, Hand"),
    ("53-7065.00", "Stockers and Order Fillers"),
]

# Word pools for the structural filler entries, per major group.
FILLER_VOCABULARY = {
    "11": (["Regional", "Divisional", "Program", "Portfolio", "Facility", "Channel",
            "Category", "Revenue", "Operations", "Quality"],
           ["Strategy", "Services", "Planning", "Development", "Logistics"],
           "Managers"),
    "13": (["Commercial", "Regulatory", "Contract", "Procurement", "Risk", "Benefits",
            "Revenue", "Trade", "Grants", "Pricing"],
           ["Program", "Operations", "Compliance", "Research", "Relations"],
           "Specialists"),
    "15": (["Applied", "Distributed", "Embedded", "Platform", "Simulation", "Systems",
            "Interface", "Analytics", "Archive", "Release"],
           ["Computing", "Data", "Network", "Software", "Information"],
           "Analysts"),
    "17": (["Structural", "Process", "Materials", "Transportation", "Energy", "Marine",
            "Geotechnical", "Instrumentation", "Packaging", "Reliability"],
           ["Systems", "Design", "Field", "Test", "Project"],
           "Engineers"),
    "19": (["Atmospheric", "Fisheries", "Rangeland", "Molecular", "Behavioral",
            "Conservation", "Food", "Forensic", "Hydrologic", "Materials"],
           ["Research", "Laboratory", "Field", "Survey", "Program"],
           "Scientists"),
    "21": (["Community", "Family", "Youth", "Rehabilitation", "Housing", "Crisis",
            "Outreach", "Addiction", "Disability", "Refugee"],
           ["Services", "Support", "Program", "Case", "Intake"],
           "Workers"),
    "23": (["Administrative", "Municipal", "Regulatory", "Appellate", "Licensing",
            "Hearing", "Claims", "Patent", "Contract", "Records"],
           ["Law", "Court", "Legal", "Compliance", "Filing"],
           "Workers"),
    "25": (["Adult", "Vocational", "Remedial", "Bilingual", "Technical", "Community",
            "Distance", "Laboratory", "Enrichment", "Literacy"],
           ["Education", "Instruction", "Curriculum", "Program", "Learning"],
           "Teachers"),
    "27": (["Multimedia", "Exhibit", "Broadcast", "Production", "Scenic", "Costume",
            "Lighting", "Sound", "Publication", "Digital"],
           ["Media", "Design", "Performance", "Content", "Studio"],
           "Workers"),
    "29": (["Clinical", "Surgical", "Radiologic", "Cardiovascular", "Pediatric",
            "Geriatric", "Orthopedic", "Community", "Rehabilitation", "Diagnostic"],
           ["Health", "Care", "Therapy", "Laboratory", "Imaging"],
           "Practitioners"),
    "31": (["Clinical", "Home", "Hospice", "Rehabilitation", "Surgical", "Dietary",
            "Psychiatric", "Pediatric", "Therapy", "Ward"],
           ["Care", "Support", "Services", "Assistance", "Attendant"],
           "Aides"),
    "33": (["Transit", "Campus", "Harbor", "Wildlife", "Customs", "Border",
            "Aviation", "Railroad", "Parks", "Facility"],
           ["Patrol", "Protective", "Enforcement", "Inspection", "Response"],
           "Officers"),
    "35": (["Banquet", "Catering", "Cafeteria", "Counter", "Buffet", "Grill",
            "Pantry", "Beverage", "Snack", "Room"],
           ["Food", "Service", "Preparation", "Kitchen", "Dining"],
           "Workers"),
    "37": (["Window", "Carpet", "Industrial", "Pool", "Pest", "Turf",
            "Tree", "Irrigation", "Pressure", "Stadium"],
           ["Cleaning", "Grounds", "Maintenance", "Sanitation", "Care"],
           "Workers"),
    "39": (["Resort", "Event", "Spa", "Gaming", "Cruise", "Fitness",
            "Leisure", "Funeral", "Wardrobe", "Concierge"],
           ["Guest", "Personal", "Recreation", "Attendant", "Service"],
           "Workers"),
    "41": (["Territory", "Inside", "Showroom", "Auction", "Wholesale", "Export",
            "Membership", "Route", "Counter", "Catalog"],
           ["Sales", "Account", "Merchandise", "Trade", "Market"],
           "Representatives"),
    "43": (["Records", "Billing", "Scheduling", "Inventory", "Registration",
            "Correspondence", "Licensing", "Claims", "Reservation", "Transcription"],
           ["Office", "Administrative", "Clerical", "Support", "Processing"],
           "Clerks"),
    "45": (["Orchard", "Vineyard", "Nursery", "Dairy", "Poultry", "Aquaculture",
            "Grain", "Livestock", "Timber", "Greenhouse"],
           ["Farm", "Harvest", "Field", "Ranch", "Forestry"],
           "Workers"),
    "47": (["Highway", "Pipeline", "Foundation", "Masonry", "Drywall", "Glazing",
            "Insulation", "Paving", "Scaffold", "Tunnel"],
           ["Construction", "Building", "Site", "Trades", "Structural"],
           "Workers"),
    "49": (["Elevator", "Appliance", "Turbine", "Signal", "Vending", "Marine",
            "Motorcycle", "Instrument", "Valve", "Tire"],
           ["Repair", "Installation", "Maintenance", "Mechanical", "Service"],
           "Technicians"),
    "51": (["Extrusion", "Molding", "Furnace", "Textile", "Printing", "Coating",
            "Assembly", "Finishing", "Casting", "Fabrication"],
           ["Production", "Machine", "Plant", "Process", "Tool"],
           "Operators"),
    "53": (["Terminal", "Freight", "Transit", "Dock", "Fleet", "Charter",
            "Courier", "Pipeline", "Rail", "Port"],
           ["Transportation", "Material", "Vehicle", "Cargo", "Delivery"],
           "Operators"),
}

CROSSWALK_2000_TO_2010 = [
    ("15-1051.00", "15-1121.00"),  # computer systems analysts
    ("15-1021.00", "15-1131.00"),  # computer programmers
    ("15-1030.00", "15-1132.00"),  # computer software engineers
]

CROSSWALK_2010_TO_2019 = [
    ("11-2031.00", "11-2032.00"),
    ("11-2031.00", "11-2033.00"),
    ("15-1111.00", "15-1221.00"),
    ("15-1121.00", "15-1211.00"),
    ("15-1122.00", "15-1212.00"),
    ("15-1131.00", "15-1251.00"),
    ("15-1132.00", "15-1252.00"),
    ("15-1133.00", "15-1252.00"),
    ("15-1134.00", "15-1254.00"),
    ("15-1134.00", "15-1255.00"),
    ("15-1141.00", "15-1242.00"),
    ("15-1141.00", "15-1243.00"),
    ("15-1142.00", "15-1244.00"),
    ("15-1143.00", "15-1241.00"),
    ("15-1151.00", "15-1232.00"),
    ("15-1152.00", "15-1231.00"),
    ("15-1199.00", "15-1299.00"),
    ("19-3031.00", "19-3033.00"),
    ("19-3031.00", "19-3034.00"),
    ("25-4021.00", "25-4022.00"),
    ("29-2071.00", "29-2072.00"),
    ("29-2071.00", "29-9021.00"),
    ("31-1011.00", "31-1121.00"),
    ("31-1013.00", "31-1133.00"),
    ("31-1014.00", "31-1131.00"),
]

SHOTS = [
    ("Aircraft cabin cleaner, Avionic Services", "Aircraft Service Attendants:53-6032.00; N; N"),
    ("Barista, Starbucks Coffee", "Baristas:35-3023.01; N; N"),
    ("Stage manager, director, and owner, Old Vic theatre", "Producers and Directors:27-2012.00; Y; Y"),
    ("Software engineer, Initech", "Software Developers:15-1252.00; N; N"),
    ("Registered nurse, Mercy General Hospital", "Registered Nurses:29-1141.00; N; N"),
    ("High school math teacher, Lincoln High School",
     "Secondary School Teachers, Except Special and Career/Technical Education:25-2031.00; N; N"),
    ("Staff accountant, Dunder Mifflin", "Accountants and Auditors:13-2011.00; N; N"),
    ("Truck driver, Schneider National", "Heavy and Tractor-Trailer Truck Drivers:53-3032.00; N; N"),
    ("Marketing manager, Acme Corporation", "Marketing Managers:11-2021.00; N; N"),
    ("Graphic designer and photographer, Freelance Studio", "Graphic Designers:27-1024.00; N; Y"),
    ("Receptionist, Hilton Hotels", "Receptionists and Information Clerks:43-4171.00; N; N"),
    ("Electrician, Bright Spark Electrical", "Electricians:47-2111.00; N; N"),
    ("Founder and CEO, TechNova", "Chief Executives:11-1011.00; Y; Y"),
    ("Chemistry student, State University", "Student; Y; N"),
    ("Sales associate, Macy's", "Retail Salespersons:41-2031.00; N; N"),
    ("Financial analyst, Goldman Sachs", "Financial and Investment Analysts:13-2051.00; N; N"),
    ("Summer research intern, Columbia University", "Social Science Research Assistants:19-4061.00; Y; N"),
]


def build_taxonomy_rows() -> list[tuple[str, str, str, str]]:
    rows = [(c, t, d, s) for c, t, d, s in DESCRIBED]
    rows.extend((c, t, "", "") for c, t in CURATED)
    codes = {r[0] for r in rows}
    assert len(codes) == len(rows), "duplicate curated code"

    majors = sorted(FILLER_VOCABULARY)
    need = TARGET_COUNT - len(rows)
    produced = 0
    slot = 0
    while produced < need:
        major = majors[slot % len(majors)]
        adjectives, domains, role = FILLER_VOCABULARY[major]
        k = slot // len(majors)
        adj = adjectives[k % len(adjectives)]
        dom = domains[(k // len(adjectives)) % len(domains)]
        minor = 60 + (k % 4)  # high minor-group numbers: clearly synthetic slots
        detail = 11 + (k // 4) % 80
        spec = k // 320
        code = f"{major}-{minor:02d}{detail:02d}.{spec:02d}"
        slot += 1
        if code in codes:
            continue
        title = f"{adj} {dom} {role}"
        rows.append((code, title, "", ""))
        codes.add(code)
        produced += 1
    assert len(rows) == TARGET_COUNT
    return rows


def main() -> None:
    DATA_DIR.mkdir(parents=True, exist_ok=True)

    rows = build_taxonomy_rows()
    with (DATA_DIR / "onet_soc_2019.csv").open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["code", "title", "description", "sample_titles"])
        writer.writerows(sorted(rows))
    print(f"taxonomy: {len(rows)} entries")

    for name, pairs in (
        ("crosswalk_2000_to_2010.csv", CROSSWALK_2000_TO_2010),
        ("crosswalk_2010_to_2019.csv", CROSSWALK_2010_TO_2019),
    ):
        with (DATA_DIR / name).open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["old_code", "new_code"])
            writer.writerows(pairs)
        print(f"{name}: {len(pairs)} rows")

    lines = ["Input texts:"]
    lines += [f"T{i}; {task}" for i, (task, _) in enumerate(SHOTS, start=1)]
    lines.append("Answers:")
    lines += [f"T{i}; {answer}" for i, (_, answer) in enumerate(SHOTS, start=1)]
    (DATA_DIR / "fewshot_examples.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"fewshot_examples.txt: {len(SHOTS)} shots")


if __name__ == "__main__":
    main()
