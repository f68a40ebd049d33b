SECTION_ID = 2
