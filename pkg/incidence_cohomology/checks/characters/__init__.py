SECTION_ID = 3
